#include "latres/diagram.hpp"
#include "latres/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace latres
{

std::size_t resource_guard(std::size_t fallback)
{
    if (const char* env = std::getenv("LATRES_MAX_ELEMENTS"))
    {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0')
            return static_cast<std::size_t>(v);
    }
    return fallback;
}

Diagram::Diagram(CoverLists upper, CoverLists lower)
    : m_upper(std::move(upper)), m_lower(std::move(lower))
{
    if (m_upper.size() != m_lower.size())
        throw std::invalid_argument("upper and lower cover lists differ in length");

    int tops = 0;
    int bottoms = 0;
    for (ElementId x = 0; x < size(); ++x)
    {
        if (m_upper[x].empty())
        {
            ++tops;
            m_top = x;
        }
        if (m_lower[x].empty())
        {
            ++bottoms;
            m_bottom = x;
        }
    }
    if (tops != 1)
        m_top = kNoElement;
    if (bottoms != 1)
        m_bottom = kNoElement;
}

bool Diagram::covers(ElementId lo, ElementId hi) const
{
    const auto& up = m_upper[lo];
    return std::find(up.begin(), up.end(), hi) != up.end();
}

std::size_t Diagram::edge_count() const noexcept
{
    std::size_t e = 0;
    for (const auto& u : m_upper)
        e += u.size();
    return e;
}

Diagram Diagram::mirrored() const
{
    CoverLists up = m_upper;
    CoverLists lo = m_lower;
    for (auto& v : up)
        std::reverse(v.begin(), v.end());
    for (auto& v : lo)
        std::reverse(v.begin(), v.end());
    return Diagram(std::move(up), std::move(lo));
}

Diagram Diagram::relabeled(std::span<const ElementId> new_id) const
{
    const auto n = m_upper.size();
    if (new_id.size() != n)
        throw std::invalid_argument("relabeling has wrong length");
    CoverLists up(n);
    CoverLists lo(n);
    for (std::size_t x = 0; x < n; ++x)
    {
        auto& u = up[new_id[x]];
        for (ElementId y : m_upper[x])
            u.push_back(new_id[y]);
        auto& l = lo[new_id[x]];
        for (ElementId y : m_lower[x])
            l.push_back(new_id[y]);
    }
    return Diagram(std::move(up), std::move(lo));
}

std::string to_string(const PrimeInterval& p)
{
    return "[" + std::to_string(p.bottom) + "," + std::to_string(p.top) + "]";
}

std::string to_string(const C3Chain& c)
{
    return "[" + std::to_string(c.bottom) + "," + std::to_string(c.middle) + "," +
           std::to_string(c.top) + "]";
}

} // namespace latres

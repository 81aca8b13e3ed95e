#include "latres/order.hpp"
#include "latres/error.hpp"

#include <algorithm>

namespace latres
{

OrderIndex::OrderIndex(const Diagram& d) : m_n(d.size())
{
    const int n = m_n;
    std::vector<int> indeg(n, 0);
    for (ElementId x = 0; x < n; ++x)
    {
        for (ElementId y : d.upper(x))
        {
            if (y < 0 || y >= n)
                throw PreconditionError("cover id out of range");
            ++indeg[y];
        }
    }
    m_topo.reserve(n);
    for (ElementId x = 0; x < n; ++x)
        if (indeg[x] == 0)
            m_topo.push_back(x);
    for (std::size_t i = 0; i < m_topo.size(); ++i)
        for (ElementId y : d.upper(m_topo[i]))
            if (--indeg[y] == 0)
                m_topo.push_back(y);
    if (static_cast<int>(m_topo.size()) != n)
        throw PreconditionError("cover relation has a cycle");

    m_down.assign(n, ElementSet(n));
    m_up.assign(n, ElementSet(n));
    m_height.assign(n, 0);
    for (ElementId x : m_topo)
    {
        m_down[x].set(x);
        for (ElementId y : d.upper(x))
        {
            m_down[y] |= m_down[x];
            m_height[y] = std::max(m_height[y], m_height[x] + 1);
        }
    }
    for (auto it = m_topo.rbegin(); it != m_topo.rend(); ++it)
    {
        const ElementId x = *it;
        m_up[x].set(x);
        for (ElementId y : d.upper(x))
            m_up[x] |= m_up[y];
    }

    // Meets by dynamic programming in topological order: for incomparable
    // x, y the meet is the largest of meet(x, y') over lower covers y' of y,
    // and it exists only if that largest candidate does. Joins mirror this.
    m_is_lattice = n > 0;
    m_meet.assign(static_cast<std::size_t>(n) * n, kNoElement);
    m_join.assign(static_cast<std::size_t>(n) * n, kNoElement);
    auto fill = [&](std::vector<ElementId>& table, const std::vector<ElementId>& order,
                    bool downward) {
        auto below = [&](ElementId a, ElementId b) { return downward ? leq(a, b) : leq(b, a); };
        for (ElementId y : order)
        {
            const auto covers = downward ? d.lower(y) : d.upper(y);
            for (ElementId x = 0; x < n; ++x)
            {
                ElementId best = kNoElement;
                if (below(x, y))
                    best = x;
                else if (below(y, x))
                    best = y;
                else
                {
                    for (ElementId c : covers)
                    {
                        const ElementId cand = table[x * n + c];
                        if (cand == kNoElement)
                            return false;
                        if (best == kNoElement || below(best, cand))
                            best = cand;
                        else if (!below(cand, best))
                            return false;
                    }
                    if (best == kNoElement)
                        return false;
                }
                table[x * n + y] = best;
            }
        }
        return true;
    };
    const std::vector<ElementId> reversed(m_topo.rbegin(), m_topo.rend());
    m_is_lattice = m_is_lattice && fill(m_meet, m_topo, true) && fill(m_join, reversed, false);
    if (!m_is_lattice)
    {
        m_meet.clear();
        m_join.clear();
    }
}

std::optional<ElementId> OrderIndex::try_meet(ElementId x, ElementId y) const
{
    const ElementSet common = m_down[x] & m_down[y];
    for (auto z = common.find_first(); z != ElementSet::npos; z = common.find_next(z))
        if (m_down[z] == common)
            return static_cast<ElementId>(z);
    return std::nullopt;
}

std::optional<ElementId> OrderIndex::try_join(ElementId x, ElementId y) const
{
    const ElementSet common = m_up[x] & m_up[y];
    for (auto z = common.find_first(); z != ElementSet::npos; z = common.find_next(z))
        if (m_up[z] == common)
            return static_cast<ElementId>(z);
    return std::nullopt;
}

std::vector<ElementId> to_vector(const ElementSet& s)
{
    std::vector<ElementId> out;
    out.reserve(s.count());
    for (auto z = s.find_first(); z != ElementSet::npos; z = s.find_next(z))
        out.push_back(static_cast<ElementId>(z));
    return out;
}

} // namespace latres

#include "latres/embedding.hpp"
#include "latres/core.hpp"
#include "latres/error.hpp"
#include "validation_detail.hpp"

#include <algorithm>
#include <tuple>

namespace latres
{

std::vector<ElementId> Cell::vertices() const
{
    std::vector<ElementId> v = left_side;
    v.insert(v.end(), right_side.begin() + 1, right_side.end() - 1);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<FaceWalk> trace_faces(const Diagram& d)
{
    const int n = d.size();
    // rotation[x]: clockwise neighbour order; dart (x, i) goes to rotation[x][i].
    std::vector<std::vector<ElementId>> rotation(n);
    std::vector<int> offset(n + 1, 0);
    for (ElementId x = 0; x < n; ++x)
    {
        auto& r = rotation[x];
        r.assign(d.upper(x).begin(), d.upper(x).end());
        r.insert(r.end(), d.lower(x).rbegin(), d.lower(x).rend());
        offset[x + 1] = offset[x] + static_cast<int>(r.size());
    }
    auto position = [&](ElementId at, ElementId from) {
        const auto& r = rotation[at];
        return static_cast<int>(std::find(r.begin(), r.end(), from) - r.begin());
    };

    std::vector<bool> used(offset[n], false);
    std::vector<FaceWalk> faces;
    for (ElementId x = 0; x < n; ++x)
    {
        for (int i = 0; i < static_cast<int>(rotation[x].size()); ++i)
        {
            if (used[offset[x] + i])
                continue;
            FaceWalk walk;
            ElementId cur = x;
            int idx = i;
            while (!used[offset[cur] + idx])
            {
                used[offset[cur] + idx] = true;
                walk.vertices.push_back(cur);
                const ElementId nxt = rotation[cur][idx];
                const int deg = static_cast<int>(rotation[nxt].size());
                idx = (position(nxt, cur) + deg - 1) % deg;
                cur = nxt;
            }
            const auto& vs = walk.vertices;
            const std::size_t k = vs.size();
            for (std::size_t j = 0; j < k; ++j)
            {
                const ElementId prev = vs[(j + k - 1) % k];
                const ElementId here = vs[j];
                const ElementId next = vs[(j + 1) % k];
                const bool in_up = d.covers(prev, here);
                const bool out_up = d.covers(here, next);
                if (!in_up && out_up)
                    ++walk.local_minima;
                if (in_up && !out_up)
                    ++walk.local_maxima;
            }
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

std::vector<ElementId> leftmost_chain(const Diagram& d)
{
    std::vector<ElementId> chain;
    for (ElementId x = d.bottom(); x != kNoElement;
         x = d.upper(x).empty() ? kNoElement : d.upper(x).front())
        chain.push_back(x);
    return chain;
}

std::vector<ElementId> rightmost_chain(const Diagram& d)
{
    std::vector<ElementId> chain;
    for (ElementId x = d.bottom(); x != kNoElement;
         x = d.upper(x).empty() ? kNoElement : d.upper(x).back())
        chain.push_back(x);
    return chain;
}

Cell cell_from_walk(const Diagram& d, const FaceWalk& w)
{
    const auto& vs = w.vertices;
    const std::size_t k = vs.size();
    std::size_t start = 0;
    for (std::size_t j = 0; j < k; ++j)
        if (d.covers(vs[j], vs[(j + k - 1) % k]) && d.covers(vs[j], vs[(j + 1) % k]))
            start = j;
    Cell c;
    c.bottom = vs[start];
    std::size_t j = start;
    c.left_side.push_back(vs[j]);
    while (d.covers(vs[j], vs[(j + 1) % k]))
    {
        j = (j + 1) % k;
        c.left_side.push_back(vs[j]);
    }
    c.top = vs[j];
    c.right_side.push_back(c.top);
    while (j != start)
    {
        j = (j + 1) % k;
        c.right_side.push_back(vs[j]);
    }
    std::reverse(c.right_side.begin(), c.right_side.end());
    return c;
}

Embedding::Embedding(Diagram d) : m_diagram(std::move(d))
{
    std::optional<OrderIndex> order;
    std::vector<FaceWalk> faces;
    const auto report = detail::validate_well_formed(m_diagram, order, faces);
    if (!report.ok())
        throw PreconditionError("diagram is not well formed: " + report.summary());
    m_order = std::move(*order);

    const int n = m_diagram.size();
    m_left_chain = leftmost_chain(m_diagram);
    m_right_chain = rightmost_chain(m_diagram);
    m_on_left.assign(n, false);
    m_on_right.assign(n, false);
    for (ElementId x : m_left_chain)
        m_on_left[x] = true;
    for (ElementId x : m_right_chain)
        m_on_right[x] = true;

    m_edge_offset.assign(n + 1, 0);
    for (ElementId x = 0; x < n; ++x)
    {
        m_edge_offset[x + 1] = m_edge_offset[x] + static_cast<int>(m_diagram.upper(x).size());
        for (ElementId y : m_diagram.upper(x))
            m_edges.push_back({x, y});
    }
    m_cell_right.assign(m_edges.size(), -1);
    m_cell_left.assign(m_edges.size(), -1);

    const ElementId b = m_diagram.bottom();
    const ElementId r = m_diagram.upper(b).back();
    for (const auto& w : faces)
    {
        const auto& vs = w.vertices;
        const std::size_t k = vs.size();
        bool outer = false;
        for (std::size_t j = 0; j < k; ++j)
            if (vs[j] == b && vs[(j + 1) % k] == r)
                outer = true;
        if (outer)
            continue;
        Cell c = cell_from_walk(m_diagram, w);
        m_cells.push_back(std::move(c));
    }
    std::sort(m_cells.begin(), m_cells.end(), [](const Cell& a, const Cell& c) {
        return std::tie(a.bottom, a.left_side) < std::tie(c.bottom, c.left_side);
    });
    for (int ci = 0; ci < static_cast<int>(m_cells.size()); ++ci)
    {
        const Cell& c = m_cells[ci];
        for (std::size_t i = 0; i + 1 < c.left_side.size(); ++i)
            m_cell_right[edge_index({c.left_side[i], c.left_side[i + 1]})] = ci;
        for (std::size_t i = 0; i + 1 < c.right_side.size(); ++i)
            m_cell_left[edge_index({c.right_side[i], c.right_side[i + 1]})] = ci;
    }
}

int Embedding::edge_index(PrimeInterval e) const
{
    if (e.bottom < 0 || e.bottom >= size())
        return -1;
    const auto up = m_diagram.upper(e.bottom);
    const auto it = std::find(up.begin(), up.end(), e.top);
    if (it == up.end())
        return -1;
    return m_edge_offset[e.bottom] + static_cast<int>(it - up.begin());
}

bool Embedding::on_left_boundary(PrimeInterval e) const
{
    return edge_index(e) >= 0 && m_on_left[e.bottom] &&
           m_diagram.upper(e.bottom).front() == e.top;
}

bool Embedding::on_right_boundary(PrimeInterval e) const
{
    return edge_index(e) >= 0 && m_on_right[e.bottom] &&
           m_diagram.upper(e.bottom).back() == e.top;
}

std::optional<int> Embedding::cell_right_of(PrimeInterval e) const
{
    const int i = edge_index(e);
    if (i < 0 || m_cell_right[i] < 0)
        return std::nullopt;
    return m_cell_right[i];
}

std::optional<int> Embedding::cell_left_of(PrimeInterval e) const
{
    const int i = edge_index(e);
    if (i < 0 || m_cell_left[i] < 0)
        return std::nullopt;
    return m_cell_left[i];
}

} // namespace latres

#include "latres/schemes.hpp"
#include "latres/constructions.hpp"
#include "latres/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace latres
{

namespace
{

VertexSet sorted_unique(std::vector<ElementId> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void require_gk(const Embedding& e)
{
    if (!check_gk_criterion(e))
        throw PreconditionError("diagram is not slim semimodular (cell criterion fails)");
}

std::optional<Cell> four_cell_at(const Embedding& e, std::optional<int> index)
{
    if (!index)
        return std::nullopt;
    const Cell& c = e.cells()[*index];
    if (!c.is_four_cell())
        return std::nullopt;
    return c;
}

} // namespace

VertexSet TightN7::elements() const
{
    return sorted_unique({u, u_star, a_l, b_l, a_r, b_r, bottom});
}

std::optional<TightN7> try_tight_n7(const Embedding& e, ElementId u)
{
    const Diagram& d = e.diagram();
    if (u < 0 || u >= d.size() || !e.is_interior(u) || !e.is_meet_irreducible(u))
        return std::nullopt;
    const ElementId us = d.upper(u)[0];
    const auto ql = four_cell_at(e, e.cell_left_of({u, us}));
    const auto qr = four_cell_at(e, e.cell_right_of({u, us}));
    if (!ql || !qr)
        return std::nullopt;
    if (ql->top != us || ql->right_middle() != u || qr->top != us || qr->left_middle() != u)
        return std::nullopt;
    TightN7 t;
    t.u = u;
    t.u_star = us;
    t.a_l = ql->bottom;
    t.b_l = ql->left_middle();
    t.a_r = qr->bottom;
    t.b_r = qr->right_middle();
    if (t.a_l == t.a_r)
        return std::nullopt;
    const auto m = e.order().try_meet(t.a_l, t.a_r);
    if (!m)
        return std::nullopt;
    t.bottom = *m;
    t.cover_preserving = d.covers(t.bottom, t.a_l) && d.covers(t.bottom, t.a_r);
    return t;
}

TightN7 tight_n7(const Embedding& e, ElementId u)
{
    auto t = try_tight_n7(e, u);
    if (!t)
        throw PreconditionError("no tight N7 centred at element " + std::to_string(u));
    return *t;
}

std::vector<ElementId> covering_n7_centers(const Embedding& e)
{
    std::vector<ElementId> out;
    for (ElementId u = 0; u < e.size(); ++u)
    {
        const auto t = try_tight_n7(e, u);
        if (t && t->cover_preserving)
            out.push_back(u);
    }
    return out;
}

std::vector<ElementId> tower_walk(const Embedding& e, ElementId x)
{
    const Diagram& d = e.diagram();
    std::vector<ElementId> walk{x};
    while (e.is_meet_irreducible(walk.back()))
    {
        const ElementId s = d.upper(walk.back())[0];
        if (!e.is_interior(s) || !e.is_meet_irreducible(s) || d.lower(s).size() != 3)
            break;
        walk.push_back(s);
    }
    return walk;
}

Rank rank(const Embedding& e, ElementId x)
{
    const auto t = try_tight_n7(e, x);
    if (!t || !t->cover_preserving)
        throw PreconditionError("rank: element " + std::to_string(x) + " is not a C2-anchor");
    return Rank{static_cast<int>(tower_walk(e, x).size()) - 1};
}

namespace
{

// Cover-preserving sublattice embedding of `pattern` into `target` with
// pattern element `root` sent to `image`.
class SublatticeSearch
{
public:
    SublatticeSearch(const Diagram& pattern, const Embedding& target)
        : m_pattern(pattern), m_porder(pattern), m_target(target)
    {
    }

    bool exists(ElementId root, ElementId image)
    {
        const int n = m_pattern.size();
        // Breadth-first order over the undirected cover graph; each element
        // after the root is reached from an earlier one.
        m_sequence.assign(1, root);
        m_parent.assign(n, kNoElement);
        m_parent_is_lower.assign(n, false);
        std::vector<bool> seen(n, false);
        seen[root] = true;
        for (std::size_t i = 0; i < m_sequence.size(); ++i)
        {
            const ElementId p = m_sequence[i];
            for (ElementId q : m_pattern.upper(p))
                if (!seen[q])
                {
                    seen[q] = true;
                    m_parent[q] = p;
                    m_parent_is_lower[q] = true;
                    m_sequence.push_back(q);
                }
            for (ElementId q : m_pattern.lower(p))
                if (!seen[q])
                {
                    seen[q] = true;
                    m_parent[q] = p;
                    m_sequence.push_back(q);
                }
        }
        m_map.assign(n, kNoElement);
        m_used.assign(m_target.size(), false);
        m_map[root] = image;
        m_used[image] = true;
        return extend(1);
    }

private:
    bool consistent(ElementId t) const
    {
        const Diagram& d = m_target.diagram();
        for (ElementId s : m_pattern.upper(t))
            if (m_map[s] != kNoElement && !d.covers(m_map[t], m_map[s]))
                return false;
        for (ElementId s : m_pattern.lower(t))
            if (m_map[s] != kNoElement && !d.covers(m_map[s], m_map[t]))
                return false;
        return true;
    }

    bool closed_under_operations() const
    {
        const OrderIndex& order = m_target.order();
        const int n = m_pattern.size();
        for (ElementId a = 0; a < n; ++a)
            for (ElementId b = a + 1; b < n; ++b)
            {
                if (order.meet(m_map[a], m_map[b]) != m_map[m_porder.meet(a, b)])
                    return false;
                if (order.join(m_map[a], m_map[b]) != m_map[m_porder.join(a, b)])
                    return false;
            }
        return true;
    }

    bool extend(std::size_t i)
    {
        if (i == m_sequence.size())
            return closed_under_operations();
        const ElementId t = m_sequence[i];
        const ElementId anchor = m_map[m_parent[t]];
        const Diagram& d = m_target.diagram();
        const auto candidates = m_parent_is_lower[t] ? d.upper(anchor) : d.lower(anchor);
        for (ElementId c : candidates)
        {
            if (m_used[c])
                continue;
            m_map[t] = c;
            m_used[c] = true;
            if (consistent(t) && extend(i + 1))
                return true;
            m_used[c] = false;
            m_map[t] = kNoElement;
        }
        return false;
    }

    const Diagram& m_pattern;
    OrderIndex m_porder;
    const Embedding& m_target;
    std::vector<ElementId> m_sequence;
    std::vector<ElementId> m_parent;
    std::vector<bool> m_parent_is_lower;
    std::vector<ElementId> m_map;
    std::vector<bool> m_used;
};

} // namespace

Rank rank_by_regions(const Embedding& e, ElementId x)
{
    int best = -1;
    for (int k = 0; 3 * k + 7 <= e.size(); ++k)
    {
        const Diagram pattern = stacked_n7(k);
        SublatticeSearch search(pattern, e);
        if (!search.exists(StackedN7Ids{k}.tower(0), x))
            break;
        best = k;
    }
    if (best < 0)
        throw PreconditionError("rank_by_regions: element " + std::to_string(x) +
                                " is not the centre of a cover-preserving N7");
    return Rank{best};
}

std::vector<StackedN7Region> stacked_tower(const Embedding& e, ElementId u)
{
    const TightN7 base = tight_n7(e, u);
    if (!base.cover_preserving)
        throw PreconditionError("stacked_tower: element " + std::to_string(u) +
                                " is not a C2-anchor");
    const auto walk = tower_walk(e, u);
    std::vector<StackedN7Region> out;
    StackedN7Region r;
    r.m = 0;
    r.elements = base.elements();
    r.interior_tower = {u};
    r.bottom = base.bottom;
    r.top = base.u_star;
    out.push_back(r);
    ElementId left = base.b_l;
    ElementId right = base.b_r;
    for (std::size_t i = 1; i < walk.size(); ++i)
    {
        const auto t = try_tight_n7(e, walk[i]);
        if (!t || t->a_l != left || t->a_r != right)
            throw LatresError("stacked_tower: tower element " + std::to_string(walk[i]) +
                              " does not extend the stacked region");
        r.m = static_cast<int>(i);
        r.elements.insert(r.elements.end(), {t->b_l, t->u_star, t->b_r});
        r.elements = sorted_unique(std::move(r.elements));
        r.interior_tower.push_back(walk[i]);
        r.top = t->u_star;
        out.push_back(r);
        left = t->b_l;
        right = t->b_r;
    }
    return out;
}

std::optional<StackLocation> locate_in_stack(const Embedding& e, ElementId t)
{
    const Diagram& d = e.diagram();
    if (t < 0 || t >= d.size())
        return std::nullopt;
    ElementId cur = t;
    int depth = 0;
    while (d.lower(cur).size() == 3)
    {
        cur = d.lower(cur)[1];
        if (++depth > d.size())
            return std::nullopt;
    }
    const auto base = try_tight_n7(e, cur);
    if (!base || !base->cover_preserving)
        return std::nullopt;
    const auto walk = tower_walk(e, cur);
    if (depth >= static_cast<int>(walk.size()) || walk[depth] != t)
        return std::nullopt;
    auto tower = stacked_tower(e, cur);
    return StackLocation{std::move(tower.back()), depth};
}

VertexSet C3Base::elements() const
{
    return sorted_unique({bottom, left_low, right_low, left_corner, center, right_corner,
                          left_high, right_high, top});
}

std::optional<C3Base> c3_base(const Embedding& e, ElementId u)
{
    const Diagram& d = e.diagram();
    if (u < 0 || u >= d.size() || d.upper(u).size() != 2 || d.lower(u).size() < 2)
        return std::nullopt;
    const ElementId hl = d.upper(u)[0];
    const ElementId hr = d.upper(u)[1];
    const auto qtop = four_cell_at(e, e.cell_right_of({u, hl}));
    const auto qleft = four_cell_at(e, e.cell_left_of({u, hl}));
    const auto qright = four_cell_at(e, e.cell_right_of({u, hr}));
    if (!qtop || !qleft || !qright)
        return std::nullopt;
    if (qtop->bottom != u || qtop->right_middle() != hr)
        return std::nullopt;
    if (qleft->top != hl || qleft->right_middle() != u)
        return std::nullopt;
    if (qright->top != hr || qright->left_middle() != u)
        return std::nullopt;
    const ElementId ll = qleft->bottom;
    const ElementId lr = qright->bottom;
    const auto qbottom = four_cell_at(e, e.cell_right_of({ll, u}));
    if (!qbottom || qbottom->top != u || qbottom->left_middle() != ll ||
        qbottom->right_middle() != lr)
        return std::nullopt;
    return C3Base{qbottom->bottom, ll, lr, qleft->left_middle(), u, qright->right_middle(),
                  hl, hr, qtop->top};
}

namespace
{

struct C3Wings
{
    C3Base base;
    std::vector<C3Chain> left;
    std::vector<C3Chain> right;
};

VertexSet chain_elements(const std::vector<C3Chain>& chains)
{
    std::vector<ElementId> v;
    for (const auto& c : chains)
        v.insert(v.end(), {c.bottom, c.middle, c.top});
    return sorted_unique(std::move(v));
}

VertexSet chain_middles(const std::vector<C3Chain>& chains)
{
    std::vector<ElementId> v;
    for (const auto& c : chains)
        v.push_back(c.middle);
    return sorted_unique(std::move(v));
}

VertexSet intersect(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Empty string when u is a C3-anchor, otherwise the rejection reason.
std::string c3_wings(const Embedding& e, ElementId u, std::optional<C3Wings>& out)
{
    const auto base = c3_base(e, u);
    if (!base)
        return "not the centre of a cover-preserving C3 x C3";
    C3Wings w{*base, wing(e, base->upper_left(), Side::Left),
              wing(e, base->upper_right(), Side::Right)};
    if (!on_boundary(e, w.left.front(), Side::Left))
        return "left wing does not end on the left boundary";
    if (!on_boundary(e, w.right.back(), Side::Right))
        return "right wing does not end on the right boundary";
    // Chains may share endpoints; a middle of one wing may not occur in the other.
    if (!intersect(chain_middles(w.left), chain_elements(w.right)).empty() ||
        !intersect(chain_middles(w.right), chain_elements(w.left)).empty())
        return "wings overlap";
    out = std::move(w);
    return {};
}

} // namespace

std::vector<ElementId> anchors(const Embedding& e, TrajectoryKind kind)
{
    require_gk(e);
    if (kind == TrajectoryKind::C2)
        return covering_n7_centers(e);
    std::vector<ElementId> out;
    for (ElementId u = 0; u < e.size(); ++u)
    {
        std::optional<C3Wings> w;
        if (c3_wings(e, u, w).empty())
            out.push_back(u);
    }
    return out;
}

std::vector<RejectedAnchor> rejected_c3_anchors(const Embedding& e)
{
    require_gk(e);
    std::vector<RejectedAnchor> out;
    for (ElementId u = 0; u < e.size(); ++u)
    {
        if (!c3_base(e, u))
            continue;
        std::optional<C3Wings> w;
        if (auto why = c3_wings(e, u, w); !why.empty())
            out.push_back({u, std::move(why)});
    }
    return out;
}

std::size_t Scheme::wing_link_count() const
{
    if (kind == TrajectoryKind::C2)
        return left_intervals.size() + right_intervals.size();
    return left_chains.size() + right_chains.size();
}

namespace
{

template <typename Link>
std::vector<Step> steps_between(const Embedding& e, const std::vector<Link>& links)
{
    std::vector<Step> out;
    for (std::size_t k = 0; k + 1 < links.size(); ++k)
    {
        const auto r = right_neighbor(e, links[k]);
        if (!r || r->first != links[k + 1])
            throw LatresError("wing links are not consecutive trajectory links");
        out.push_back(r->second);
    }
    return out;
}

void add_cell(std::optional<int> index, std::vector<int>& cells)
{
    if (!index)
        throw LatresError("scheme region references a missing cell");
    cells.push_back(*index);
}

// Region boundary: edges lying in exactly one region cell, minus the
// terminal links; the remainder splits into the upper and lower boundary.
void finish_region(const Embedding& e, Scheme& s, const std::vector<PrimeInterval>& terminals,
                   ElementId upper_seed, ElementId lower_seed)
{
    s.region_cells = sorted_unique(std::move(s.region_cells));
    std::map<PrimeInterval, int> uses;
    std::vector<ElementId> elements;
    for (int ci : s.region_cells)
    {
        const Cell& c = e.cells()[ci];
        for (const auto* side : {&c.left_side, &c.right_side})
            for (std::size_t i = 0; i + 1 < side->size(); ++i)
                ++uses[PrimeInterval{(*side)[i], (*side)[i + 1]}];
        const auto vs = c.vertices();
        elements.insert(elements.end(), vs.begin(), vs.end());
    }
    s.elements = sorted_unique(std::move(elements));

    std::map<ElementId, std::vector<ElementId>> graph;
    std::vector<ElementId> boundary_vertices;
    for (const auto& [edge, count] : uses)
    {
        if (count != 1)
            continue;
        boundary_vertices.insert(boundary_vertices.end(), {edge.bottom, edge.top});
        if (std::find(terminals.begin(), terminals.end(), edge) != terminals.end())
            continue;
        graph[edge.bottom].push_back(edge.top);
        graph[edge.top].push_back(edge.bottom);
    }
    auto component = [&](ElementId seed) {
        std::vector<ElementId> seen{seed};
        std::deque<ElementId> queue{seed};
        while (!queue.empty())
        {
            const ElementId x = queue.front();
            queue.pop_front();
            for (ElementId y : graph[x])
                if (std::find(seen.begin(), seen.end(), y) == seen.end())
                {
                    seen.push_back(y);
                    queue.push_back(y);
                }
        }
        return sorted_unique(std::move(seen));
    };
    s.upper_boundary = component(upper_seed);
    s.lower_boundary = component(lower_seed);
    if (!intersect(s.upper_boundary, s.lower_boundary).empty())
        throw LatresError("scheme boundary is not split by its terminal links");

    if (s.kind == TrajectoryKind::C2)
    {
        const VertexSet on_boundary = sorted_unique(std::move(boundary_vertices));
        std::set_difference(s.elements.begin(), s.elements.end(), on_boundary.begin(),
                            on_boundary.end(), std::back_inserter(s.interior));
    }
    else
    {
        std::vector<ElementId> mids{s.anchor};
        for (const auto* wing : {&s.left_chains, &s.right_chains})
            for (const auto& c : *wing)
                mids.push_back(c.middle);
        s.interior = sorted_unique(std::move(mids));
    }
}

Scheme c2_scheme(const Embedding& e, ElementId u)
{
    const auto t = try_tight_n7(e, u);
    if (!t || !t->cover_preserving)
        throw PreconditionError("scheme: element " + std::to_string(u) + " is not a C2-anchor");
    Scheme s;
    s.kind = TrajectoryKind::C2;
    s.anchor = u;
    s.base = t->elements();
    const PrimeInterval upper_left{t->b_l, t->u_star};
    const PrimeInterval upper_right{t->b_r, t->u_star};
    s.left_intervals = wing(e, upper_left, Side::Left);
    s.right_intervals = wing(e, upper_right, Side::Right);
    for (const auto& p : s.left_intervals)
        if (std::find(s.right_intervals.begin(), s.right_intervals.end(), p) !=
            s.right_intervals.end())
            throw PreconditionError("scheme: wings of element " + std::to_string(u) + " overlap");
    s.left_steps = steps_between(e, s.left_intervals);
    s.right_steps = steps_between(e, s.right_intervals);

    add_cell(e.cell_left_of({u, t->u_star}), s.region_cells);
    add_cell(e.cell_right_of({u, t->u_star}), s.region_cells);
    add_cell(e.cell_right_of({t->a_l, u}), s.region_cells);
    for (std::size_t k = 0; k + 1 < s.left_intervals.size(); ++k)
        add_cell(e.cell_right_of(s.left_intervals[k]), s.region_cells);
    for (std::size_t k = 0; k + 1 < s.right_intervals.size(); ++k)
        add_cell(e.cell_right_of(s.right_intervals[k]), s.region_cells);

    const auto& lt = s.left_intervals.front();
    const auto& rt = s.right_intervals.back();
    finish_region(e, s, {lt, rt}, lt.top, lt.bottom);
    if (!std::binary_search(s.upper_boundary.begin(), s.upper_boundary.end(), rt.top) ||
        !std::binary_search(s.lower_boundary.begin(), s.lower_boundary.end(), rt.bottom))
        throw LatresError("scheme boundary does not connect the terminal links");
    return s;
}

Scheme c3_scheme(const Embedding& e, ElementId u)
{
    std::optional<C3Wings> w;
    if (auto why = c3_wings(e, u, w); !why.empty())
        throw PreconditionError("scheme: element " + std::to_string(u) +
                                " is not a C3-anchor: " + why);
    Scheme s;
    s.kind = TrajectoryKind::C3;
    s.anchor = u;
    s.base = w->base.elements();
    s.left_chains = std::move(w->left);
    s.right_chains = std::move(w->right);
    s.left_steps = steps_between(e, s.left_chains);
    s.right_steps = steps_between(e, s.right_chains);

    const C3Base& b = w->base;
    add_cell(e.cell_right_of({b.left_low, u}), s.region_cells);
    add_cell(e.cell_left_of({u, b.left_high}), s.region_cells);
    add_cell(e.cell_right_of({u, b.right_high}), s.region_cells);
    add_cell(e.cell_right_of({u, b.left_high}), s.region_cells);
    for (const auto* wing : {&s.left_chains, &s.right_chains})
        for (std::size_t k = 0; k + 1 < wing->size(); ++k)
        {
            const C3Chain& c = (*wing)[k];
            add_cell(e.cell_right_of({c.bottom, c.middle}), s.region_cells);
            add_cell(e.cell_right_of({c.middle, c.top}), s.region_cells);
        }

    const auto& lt = s.left_chains.front();
    const auto& rt = s.right_chains.back();
    finish_region(e, s,
                  {{lt.bottom, lt.middle}, {lt.middle, lt.top}, {rt.bottom, rt.middle},
                   {rt.middle, rt.top}},
                  lt.top, lt.bottom);
    if (!std::binary_search(s.upper_boundary.begin(), s.upper_boundary.end(), rt.top) ||
        !std::binary_search(s.lower_boundary.begin(), s.lower_boundary.end(), rt.bottom))
        throw LatresError("scheme boundary does not connect the terminal links");
    return s;
}

} // namespace

Scheme scheme(const Embedding& e, ElementId u, TrajectoryKind kind)
{
    require_gk(e);
    return scheme_unchecked(e, u, kind);
}

Scheme scheme_unchecked(const Embedding& e, ElementId u, TrajectoryKind kind)
{
    return kind == TrajectoryKind::C2 ? c2_scheme(e, u) : c3_scheme(e, u);
}

} // namespace latres

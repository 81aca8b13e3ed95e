#include "latres/geometry.hpp"
#include "latres/error.hpp"

#include <algorithm>
#include <set>

namespace latres
{

std::vector<Cell> cells(const Diagram& d)
{
    return Embedding(d).cells();
}

bool check_gk_criterion(const Embedding& e)
{
    std::set<ElementId> bottoms;
    for (const auto& c : e.cells())
    {
        if (!c.is_four_cell())
            return false;
        if (!bottoms.insert(c.bottom).second)
            return false;
    }
    return true;
}

bool check_gk_criterion(const Diagram& d)
{
    return check_gk_criterion(Embedding(d));
}

std::vector<VertexSet> covering_squares(const Embedding& e)
{
    const Diagram& d = e.diagram();
    const OrderIndex& order = e.order();
    std::vector<VertexSet> out;
    for (ElementId c = 0; c < d.size(); ++c)
    {
        const auto up = d.upper(c);
        for (std::size_t i = 0; i < up.size(); ++i)
        {
            for (std::size_t j = i + 1; j < up.size(); ++j)
            {
                const ElementId top = order.join(up[i], up[j]);
                if (d.covers(up[i], top) && d.covers(up[j], top))
                {
                    VertexSet s{c, up[i], up[j], top};
                    std::sort(s.begin(), s.end());
                    out.push_back(std::move(s));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> four_cells(const Embedding& e)
{
    std::vector<VertexSet> out;
    for (const auto& c : e.cells())
        if (c.is_four_cell())
            out.push_back(c.vertices());
    std::sort(out.begin(), out.end());
    return out;
}

namespace
{

const Cell& four_cell(const Embedding& e, int index)
{
    const Cell& c = e.cells()[index];
    if (!c.is_four_cell())
        throw PreconditionError("trajectory crosses a cell that is not a 4-cell");
    return c;
}

} // namespace

std::optional<std::pair<PrimeInterval, Step>> right_neighbor(const Embedding& e, PrimeInterval p)
{
    const auto ci = e.cell_right_of(p);
    if (!ci)
        return std::nullopt;
    const Cell& q = four_cell(e, *ci);
    if (p.bottom == q.bottom)
        return std::pair{PrimeInterval{q.right_middle(), q.top}, Step::Up};
    return std::pair{PrimeInterval{q.bottom, q.right_middle()}, Step::Down};
}

std::optional<std::pair<PrimeInterval, Step>> left_neighbor(const Embedding& e, PrimeInterval p)
{
    const auto ci = e.cell_left_of(p);
    if (!ci)
        return std::nullopt;
    const Cell& q = four_cell(e, *ci);
    if (p.top == q.top)
        return std::pair{PrimeInterval{q.bottom, q.left_middle()}, Step::Up};
    return std::pair{PrimeInterval{q.left_middle(), q.top}, Step::Down};
}

std::optional<std::pair<C3Chain, Step>> right_neighbor(const Embedding& e, const C3Chain& c)
{
    const auto lo = right_neighbor(e, PrimeInterval{c.bottom, c.middle});
    const auto hi = right_neighbor(e, PrimeInterval{c.middle, c.top});
    if (!lo || !hi || lo->second != hi->second || lo->first.top != hi->first.bottom)
        return std::nullopt;
    return std::pair{C3Chain{lo->first.bottom, lo->first.top, hi->first.top}, lo->second};
}

std::optional<std::pair<C3Chain, Step>> left_neighbor(const Embedding& e, const C3Chain& c)
{
    const auto lo = left_neighbor(e, PrimeInterval{c.bottom, c.middle});
    const auto hi = left_neighbor(e, PrimeInterval{c.middle, c.top});
    if (!lo || !hi || lo->second != hi->second || lo->first.top != hi->first.bottom)
        return std::nullopt;
    return std::pair{C3Chain{lo->first.bottom, lo->first.top, hi->first.top}, lo->second};
}

namespace
{

template <typename Link>
void walk_trajectory(const Embedding& e, const Link& start, std::vector<Link>& links,
                     std::vector<Step>& steps)
{
    // Planar trajectories never revisit a link, so the edge count bounds the walk.
    const int limit = e.edge_count() + 1;
    Link first = start;
    int guard = 0;
    while (auto l = left_neighbor(e, first))
    {
        first = l->first;
        if (++guard > limit)
            throw LatresError("trajectory walk does not terminate");
    }
    links.push_back(first);
    guard = 0;
    while (auto r = right_neighbor(e, links.back()))
    {
        links.push_back(r->first);
        steps.push_back(r->second);
        if (++guard > limit)
            throw LatresError("trajectory walk does not terminate");
    }
}

void set_turn(Trajectory& t)
{
    const auto it = std::find(t.steps.begin(), t.steps.end(), Step::Down);
    if (it != t.steps.end())
        t.turn_index = static_cast<std::size_t>(it - t.steps.begin());
}

} // namespace

Trajectory trajectory(const Embedding& e, PrimeInterval start)
{
    if (e.edge_index(start) < 0)
        throw PreconditionError("trajectory: " + to_string(start) + " is not a prime interval");
    Trajectory t;
    t.kind = TrajectoryKind::C2;
    walk_trajectory(e, start, t.intervals, t.steps);
    set_turn(t);
    return t;
}

Trajectory trajectory(const Embedding& e, const C3Chain& start)
{
    if (e.edge_index({start.bottom, start.middle}) < 0 ||
        e.edge_index({start.middle, start.top}) < 0)
        throw PreconditionError("trajectory: " + to_string(start) +
                                " is not a cover-preserving 3-chain");
    Trajectory t;
    t.kind = TrajectoryKind::C3;
    walk_trajectory(e, start, t.chains, t.steps);
    set_turn(t);
    return t;
}

namespace
{

template <typename Link>
std::vector<Link> cut_wing(const std::vector<Link>& links, const Link& start, Side side)
{
    const auto it = std::find(links.begin(), links.end(), start);
    if (side == Side::Left)
        return {links.begin(), it + 1};
    return {it, links.end()};
}

} // namespace

std::vector<PrimeInterval> wing(const Embedding& e, PrimeInterval start, Side side)
{
    return cut_wing(trajectory(e, start).intervals, start, side);
}

std::vector<C3Chain> wing(const Embedding& e, const C3Chain& start, Side side)
{
    return cut_wing(trajectory(e, start).chains, start, side);
}

std::vector<C3Chain> c3_chains(const Diagram& d)
{
    std::vector<C3Chain> out;
    for (ElementId m = 0; m < d.size(); ++m)
        for (ElementId b : d.lower(m))
            for (ElementId t : d.upper(m))
                out.push_back({b, m, t});
    std::sort(out.begin(), out.end());
    return out;
}

bool on_boundary(const Embedding& e, const C3Chain& c, Side side)
{
    const PrimeInterval lo{c.bottom, c.middle};
    const PrimeInterval hi{c.middle, c.top};
    if (side == Side::Left)
        return e.on_left_boundary(lo) && e.on_left_boundary(hi);
    return e.on_right_boundary(lo) && e.on_right_boundary(hi);
}

} // namespace latres

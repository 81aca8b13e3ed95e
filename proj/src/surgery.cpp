#include "latres/surgery.hpp"
#include "latres/core.hpp"
#include "latres/error.hpp"
#include "latres/schemes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latres
{

const char* op_name(SurgeryOp op)
{
    switch (op)
    {
    case SurgeryOp::Resect: return "resect";
    case SurgeryOp::Insert: return "insert";
    case SurgeryOp::RemoveDi: return "remove_di";
    case SurgeryOp::RemoveCorner: return "remove_corner";
    }
    return "?";
}

std::string SurgeryRecord::to_line() const
{
    std::ostringstream os;
    os << op_name(op) << ' ' << anchor << " removed=[";
    for (std::size_t i = 0; i < removed.size(); ++i)
        os << (i ? "," : "") << removed[i];
    os << "] added=" << added;
    return os.str();
}

SurgeryRecord SurgeryRecord::parse(const std::string& line)
{
    std::istringstream is(line);
    std::string op, removed, added;
    long anchor = -1;
    if (!(is >> op >> anchor >> removed >> added))
        throw ParseError(1, "malformed surgery record '" + line + "'");
    SurgeryRecord r;
    bool known = false;
    for (SurgeryOp o :
         {SurgeryOp::Resect, SurgeryOp::Insert, SurgeryOp::RemoveDi, SurgeryOp::RemoveCorner})
        if (op == op_name(o))
        {
            r.op = o;
            known = true;
        }
    if (!known)
        throw ParseError(1, "unknown surgery operation '" + op + "'");
    r.anchor = static_cast<ElementId>(anchor);
    if (removed.rfind("removed=[", 0) != 0 || removed.back() != ']')
        throw ParseError(1, "malformed removed=[...] field");
    std::string ids = removed.substr(9, removed.size() - 10);
    std::replace(ids.begin(), ids.end(), ',', ' ');
    std::istringstream ids_in(ids);
    for (long id; ids_in >> id;)
        r.removed.push_back(static_cast<ElementId>(id));
    if (!ids_in.eof())
        throw ParseError(1, "malformed id in removed=[...]");
    if (added.rfind("added=", 0) != 0)
        throw ParseError(1, "malformed added= field");
    try
    {
        r.added = std::stoi(added.substr(6));
    }
    catch (const std::exception&)
    {
        throw ParseError(1, "malformed added= field");
    }
    return r;
}

namespace
{

void substitute(std::vector<ElementId>& list, ElementId from, ElementId to)
{
    const auto it = std::find(list.begin(), list.end(), from);
    if (it == list.end())
        throw LatresError("surgery: cover list is missing an expected entry");
    *it = to;
}

void erase_value(std::vector<ElementId>& list, ElementId v)
{
    list.erase(std::remove(list.begin(), list.end(), v), list.end());
}

// Drops the elements flagged in `deleted`, renumbering the rest in order.
SurgeryResult compact(CoverLists upper, CoverLists lower, const std::vector<bool>& deleted)
{
    const int n = static_cast<int>(upper.size());
    SurgeryResult r;
    r.id_map.assign(n, kNoElement);
    int next = 0;
    for (ElementId x = 0; x < n; ++x)
        if (!deleted[x])
            r.id_map[x] = next++;
    CoverLists up(next), lo(next);
    for (ElementId x = 0; x < n; ++x)
    {
        if (deleted[x])
            continue;
        for (ElementId y : upper[x])
            up[r.id_map[x]].push_back(r.id_map.at(y));
        for (ElementId y : lower[x])
            lo[r.id_map[x]].push_back(r.id_map.at(y));
    }
    r.diagram = Diagram(std::move(up), std::move(lo));
    for (ElementId x = 0; x < n; ++x)
        if (deleted[x])
            r.record.removed.push_back(x);
    return r;
}

// Deletes a doubly irreducible x; its lower cover p and upper cover q become
// a cover pair only when no other element lies strictly between them.
SurgeryResult delete_doubly_irreducible(const Embedding& e, ElementId x)
{
    const Diagram& d = e.diagram();
    const ElementId p = d.lower(x)[0];
    const ElementId q = d.upper(x)[0];
    ElementSet between = e.order().up(p) & e.order().down(q);
    between.reset(p);
    between.reset(q);
    between.reset(x);
    CoverLists upper = d.upper_lists();
    CoverLists lower = d.lower_lists();
    if (between.none())
    {
        substitute(upper[p], x, q);
        substitute(lower[q], x, p);
    }
    else
    {
        erase_value(upper[p], x);
        erase_value(lower[q], x);
    }
    std::vector<bool> deleted(d.size(), false);
    deleted[x] = true;
    return compact(std::move(upper), std::move(lower), deleted);
}

void require_element(const Diagram& d, ElementId x, const char* op)
{
    if (x < 0 || x >= d.size())
        throw PreconditionError(std::string(op) + ": element " + std::to_string(x) +
                                " out of range");
}

bool is_doubly_irreducible(const Diagram& d, ElementId x)
{
    return d.upper(x).size() == 1 && d.lower(x).size() == 1;
}

} // namespace

SurgeryResult remove_boundary_di(const Diagram& d, ElementId x)
{
    require_element(d, x, "remove_boundary_di");
    const Embedding e(d);
    if (!check_gk_criterion(e) || !covering_n7_centers(e).empty())
        throw PreconditionError("remove_boundary_di: diagram is not slim distributive");
    if (!is_doubly_irreducible(d, x) || !e.on_boundary(x))
        throw PreconditionError("remove_boundary_di: element " + std::to_string(x) +
                                " is not a doubly irreducible boundary element");
    auto r = delete_doubly_irreducible(e, x);
    r.record.op = SurgeryOp::RemoveDi;
    r.record.anchor = x;
    return r;
}

Diagram add_boundary_di(const Diagram& d, ElementId p, ElementId q, Side side)
{
    require_element(d, p, "add_boundary_di");
    require_element(d, q, "add_boundary_di");
    const Embedding e(d);
    const bool on_side = side == Side::Left
                             ? e.on_left_boundary(p) && e.on_left_boundary(q)
                             : e.on_right_boundary(p) && e.on_right_boundary(q);
    if (!on_side || !e.order().less(p, q))
        throw PreconditionError("add_boundary_di: need p < q on the chosen boundary chain");
    const ElementId x = d.size();
    CoverLists upper = d.upper_lists();
    CoverLists lower = d.lower_lists();
    upper.push_back({q});
    lower.push_back({p});
    if (d.covers(p, q))
    {
        substitute(upper[p], q, x);
        substitute(lower[q], p, x);
    }
    else if (side == Side::Left)
    {
        upper[p].insert(upper[p].begin(), x);
        lower[q].insert(lower[q].begin(), x);
    }
    else
    {
        upper[p].push_back(x);
        lower[q].push_back(x);
    }
    return Diagram(std::move(upper), std::move(lower));
}

std::vector<ElementId> weak_corners(const Diagram& d)
{
    const Embedding e(d);
    std::vector<ElementId> out;
    for (ElementId x = 0; x < d.size(); ++x)
    {
        if (!e.on_boundary(x) || !is_doubly_irreducible(d, x))
            continue;
        const auto comparable = e.order().up(x) | e.order().down(x);
        if (!comparable.all())
            out.push_back(x);
    }
    return out;
}

std::vector<ElementId> corners(const Diagram& d)
{
    std::vector<ElementId> out;
    for (ElementId x : weak_corners(d))
        if (d.upper(d.lower(x)[0]).size() == 2 && d.lower(d.upper(x)[0]).size() == 2)
            out.push_back(x);
    return out;
}

bool is_rectangular(const Diagram& d)
{
    const Embedding e(d);
    std::vector<ElementId> left, right;
    for (ElementId x : weak_corners(d))
    {
        if (e.on_left_boundary(x))
            left.push_back(x);
        if (e.on_right_boundary(x))
            right.push_back(x);
    }
    if (left.size() != 1 || right.size() != 1)
        return false;
    const auto& o = e.order();
    return o.meet(left[0], right[0]) == d.bottom() && o.join(left[0], right[0]) == d.top();
}

SurgeryResult remove_corner(const Diagram& d, ElementId x)
{
    require_element(d, x, "remove_corner");
    const Embedding e(d);
    if (!check_gk_criterion(e))
        throw PreconditionError("remove_corner: diagram is not slim semimodular");
    const auto cs = corners(d);
    if (std::find(cs.begin(), cs.end(), x) == cs.end())
        throw PreconditionError("remove_corner: element " + std::to_string(x) +
                                " is not a corner");
    auto r = delete_doubly_irreducible(e, x);
    r.record.op = SurgeryOp::RemoveCorner;
    r.record.anchor = x;
    return r;
}

SurgeryResult resect(const Embedding& e, ElementId u)
{
    const Scheme s = scheme(e, u, TrajectoryKind::C3);
    const Diagram& d = e.diagram();
    std::map<ElementId, C3Chain> chain_of;
    for (const auto* wing : {&s.left_chains, &s.right_chains})
        for (const auto& c : *wing)
            chain_of[c.middle] = c;
    std::vector<bool> deleted(d.size(), false);
    for (const auto& [m, c] : chain_of)
        deleted[m] = true;

    // Each wing chain collapses to the prime interval [bottom, top], taking
    // the middle's place in both cover lists.
    CoverLists upper(d.size()), lower(d.size());
    for (ElementId v = 0; v < d.size(); ++v)
    {
        if (deleted[v])
            continue;
        for (ElementId c : d.upper(v))
        {
            if (!deleted[c])
                upper[v].push_back(c);
            else if (chain_of[c].bottom == v)
                upper[v].push_back(chain_of[c].top);
        }
        for (ElementId c : d.lower(v))
        {
            if (!deleted[c])
                lower[v].push_back(c);
            else if (chain_of[c].top == v)
                lower[v].push_back(chain_of[c].bottom);
        }
    }
    const C3Chain& ul = s.left_chains.back();
    const C3Chain& ur = s.right_chains.front();
    const ElementId w = ul.top;
    upper[u] = {w};
    auto& wl = lower[w];
    const auto pos = std::find(wl.begin(), wl.end(), ur.bottom);
    if (pos == wl.end() || pos == wl.begin() || *(pos - 1) != ul.bottom)
        throw LatresError("resect: base chains are not adjacent below the top");
    wl.insert(pos, u);

    auto r = compact(std::move(upper), std::move(lower), deleted);
    r.record.op = SurgeryOp::Resect;
    r.record.anchor = u;
    return r;
}

SurgeryResult resect(const Diagram& d, ElementId u)
{
    require_element(d, u, "resect");
    return resect(Embedding(d), u);
}

namespace
{

SurgeryResult insert_with(const Embedding& e, const Scheme& s)
{
    const Diagram& d = e.diagram();
    const ElementId u = s.anchor;
    const int n = d.size();
    const int nl = static_cast<int>(s.left_intervals.size());
    const int nr = static_cast<int>(s.right_intervals.size());
    CoverLists upper = d.upper_lists();
    CoverLists lower = d.lower_lists();
    upper.resize(n + nl + nr);
    lower.resize(n + nl + nr);

    auto subdivide_wing = [&](const std::vector<PrimeInterval>& links,
                              const std::vector<Step>& steps, ElementId first) {
        for (std::size_t k = 0; k < links.size(); ++k)
        {
            const auto [x, y] = links[k];
            const ElementId m = first + static_cast<ElementId>(k);
            substitute(upper[x], y, m);
            substitute(lower[y], x, m);
            upper[m] = {y};
            lower[m] = {x};
        }
        // Step k -> k+1: Up means m_k ≺ m_{k+1}, Down means m_{k+1} ≺ m_k.
        for (std::size_t k = 0; k < steps.size(); ++k)
        {
            const ElementId a = first + static_cast<ElementId>(k);
            const ElementId b = a + 1;
            if (steps[k] == Step::Up)
            {
                upper[a].push_back(b);
                lower[b].insert(lower[b].begin(), a);
            }
            else
            {
                upper[b].insert(upper[b].begin(), a);
                lower[a].push_back(b);
            }
        }
    };
    subdivide_wing(s.left_intervals, s.left_steps, n);
    subdivide_wing(s.right_intervals, s.right_steps, n + nl);

    const ElementId ml = n + nl - 1;
    const ElementId mr = n + nl;
    const ElementId us = s.left_intervals.back().top;
    erase_value(lower[us], u);
    upper[u] = {ml, mr};
    lower[ml].push_back(u);
    lower[mr].insert(lower[mr].begin(), u);

    SurgeryResult r;
    r.diagram = Diagram(std::move(upper), std::move(lower));
    r.id_map.resize(n);
    for (ElementId x = 0; x < n; ++x)
        r.id_map[x] = x;
    r.record.op = SurgeryOp::Insert;
    r.record.anchor = u;
    r.record.added = nl + nr;
    return r;
}

} // namespace

SurgeryResult insert(const Embedding& e, ElementId u)
{
    return insert_with(e, scheme(e, u, TrajectoryKind::C2));
}

SurgeryResult insert(const Diagram& d, ElementId u)
{
    require_element(d, u, "insert");
    return insert(Embedding(d), u);
}

SurgeryResult insert_unchecked(const Embedding& e, ElementId u)
{
    return insert_with(e, scheme_unchecked(e, u, TrajectoryKind::C2));
}

SurgeryResult replay(const Diagram& d, const SurgeryRecord& r)
{
    SurgeryResult out = [&] {
        switch (r.op)
        {
        case SurgeryOp::Resect: return resect(d, r.anchor);
        case SurgeryOp::Insert: return insert(d, r.anchor);
        case SurgeryOp::RemoveDi: return remove_boundary_di(d, r.anchor);
        case SurgeryOp::RemoveCorner: return remove_corner(d, r.anchor);
        }
        throw LatresError("replay: unknown operation");
    }();
    // A record from a different diagram can name a valid anchor by accident.
    if (out.record != r)
        throw PreconditionError("replay: record '" + r.to_line() + "' does not match '" +
                                out.record.to_line() + "'");
    return out;
}

} // namespace latres

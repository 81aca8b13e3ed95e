#include "latres/core.hpp"
#include "latres/embedding.hpp"
#include "latres/error.hpp"
#include "latres/order.hpp"
#include "validation_detail.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>

namespace latres
{

const char* violation_name(Violation v)
{
    switch (v)
    {
    case Violation::DegenerateSize: return "degenerate size";
    case Violation::IdOutOfRange: return "id out of range";
    case Violation::DuplicateCover: return "duplicate cover";
    case Violation::InconsistentLists: return "inconsistent upper/lower lists";
    case Violation::Acyclic: return "acyclic";
    case Violation::TransitivelyReduced: return "transitively reduced";
    case Violation::UniqueTop: return "unique top";
    case Violation::UniqueBottom: return "unique bottom";
    case Violation::Lattice: return "lattice";
    case Violation::Planar: return "planar";
    }
    return "?";
}

bool ValidationReport::has(Violation v) const
{
    return std::any_of(issues.begin(), issues.end(),
                       [v](const ValidationIssue& i) { return i.kind == v; });
}

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    for (const auto& i : issues)
        os << violation_name(i.kind) << ": " << i.detail << "\n";
    return os.str();
}

namespace
{

void check_planarity(const Diagram& d, const std::vector<FaceWalk>& faces,
                     ValidationReport& report)
{
    const long v = d.size();
    const long e = static_cast<long>(d.edge_count());
    const long f = static_cast<long>(faces.size());
    if (v - e + f != 2)
    {
        report.issues.push_back({Violation::Planar,
                                 "cover orders do not define a planar embedding (V-E+F = " +
                                     std::to_string(v - e + f) + ")"});
        return;
    }
    for (const auto& w : faces)
    {
        if (w.local_minima != 1 || w.local_maxima != 1)
        {
            report.issues.push_back({Violation::Planar,
                                     "face through element " + std::to_string(w.vertices.front()) +
                                         " is not bounded by two chains"});
            return;
        }
    }
    // The outer face is the one entered along bottom -> rightmost upper cover;
    // it must be bounded by the two boundary chains, so it contains the top.
    const ElementId b = d.bottom();
    const ElementId r = d.upper(b).back();
    for (const auto& w : faces)
    {
        const auto& vs = w.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i)
        {
            if (vs[i] == b && vs[(i + 1) % vs.size()] == r)
            {
                if (std::find(vs.begin(), vs.end(), d.top()) == vs.end())
                    report.issues.push_back({Violation::Planar, "top is not on the outer face"});
                const auto left = leftmost_chain(d);
                const auto right = rightmost_chain(d);
                if (vs.size() + 2 != left.size() + right.size())
                    report.issues.push_back(
                        {Violation::Planar, "outer face is not the union of the boundary chains"});
                // Rotations of degree two are symmetric, so also require the
                // lower lists to trace the same boundary chains from the top.
                auto descend = [&d](bool leftmost) {
                    std::vector<ElementId> c;
                    for (ElementId x = d.top(); x != kNoElement;
                         x = d.lower(x).empty() ? kNoElement
                                                : (leftmost ? d.lower(x).front() : d.lower(x).back()))
                        c.push_back(x);
                    std::reverse(c.begin(), c.end());
                    return c;
                };
                if (descend(true) != left || descend(false) != right)
                    report.issues.push_back(
                        {Violation::Planar, "lower cover lists disagree with the boundary chains"});
                return;
            }
        }
    }
}

} // namespace

ValidationReport validate_well_formed(const Diagram& d)
{
    std::optional<OrderIndex> order;
    std::vector<FaceWalk> faces;
    return detail::validate_well_formed(d, order, faces);
}

ValidationReport detail::validate_well_formed(const Diagram& d, std::optional<OrderIndex>& order,
                                              std::vector<FaceWalk>& faces)
{
    ValidationReport report;
    const int n = d.size();
    if (n < 2)
    {
        report.issues.push_back({Violation::DegenerateSize, "fewer than two elements"});
        return report;
    }

    for (ElementId x = 0; x < n; ++x)
    {
        for (const auto* list : {&d.upper_lists()[x], &d.lower_lists()[x]})
        {
            std::set<ElementId> seen;
            for (ElementId y : *list)
            {
                if (y < 0 || y >= n)
                {
                    report.issues.push_back({Violation::IdOutOfRange,
                                             "element " + std::to_string(x) + " lists id " +
                                                 std::to_string(y)});
                    return report;
                }
                if (!seen.insert(y).second || y == x)
                    report.issues.push_back({Violation::DuplicateCover,
                                             "element " + std::to_string(x) + " lists " +
                                                 std::to_string(y) + " twice or itself"});
            }
        }
    }
    for (ElementId x = 0; x < n; ++x)
    {
        for (ElementId y : d.upper(x))
        {
            const auto lo = d.lower(y);
            if (std::find(lo.begin(), lo.end(), x) == lo.end())
                report.issues.push_back({Violation::InconsistentLists,
                                         std::to_string(y) + " is an upper cover of " +
                                             std::to_string(x) + " but not vice versa"});
        }
        for (ElementId y : d.lower(x))
        {
            const auto up = d.upper(y);
            if (std::find(up.begin(), up.end(), x) == up.end())
                report.issues.push_back({Violation::InconsistentLists,
                                         std::to_string(y) + " is a lower cover of " +
                                             std::to_string(x) + " but not vice versa"});
        }
    }
    if (!report.ok())
        return report;

    try
    {
        order.emplace(d);
    }
    catch (const PreconditionError&)
    {
        report.issues.push_back({Violation::Acyclic, "cover relation contains a cycle"});
        return report;
    }

    for (ElementId x = 0; x < n; ++x)
    {
        for (ElementId y : d.upper(x))
        {
            for (ElementId z : d.upper(x))
            {
                if (z != y && order->less(z, y))
                {
                    report.issues.push_back({Violation::TransitivelyReduced,
                                             "cover " + std::to_string(x) + " < " +
                                                 std::to_string(y) + " is implied via " +
                                                 std::to_string(z)});
                    break;
                }
            }
        }
    }
    if (d.top() == kNoElement)
        report.issues.push_back({Violation::UniqueTop, "expected exactly one maximal element"});
    if (d.bottom() == kNoElement)
        report.issues.push_back({Violation::UniqueBottom, "expected exactly one minimal element"});
    if (!order->is_lattice())
        report.issues.push_back({Violation::Lattice, "some pair lacks a meet or a join"});
    if (!report.ok())
        return report;

    faces = trace_faces(d);
    check_planarity(d, faces, report);
    return report;
}

BoundaryChains boundary_chains(const Diagram& d)
{
    return {leftmost_chain(d), rightmost_chain(d)};
}

Irreducibles irreducibles(const Diagram& d)
{
    Irreducibles out;
    for (ElementId x = 0; x < d.size(); ++x)
    {
        const bool ji = d.lower(x).size() == 1;
        const bool mi = d.upper(x).size() == 1;
        if (ji)
            out.join_irreducible.push_back(x);
        if (mi)
            out.meet_irreducible.push_back(x);
        if (ji && mi)
            out.doubly_irreducible.push_back(x);
    }
    return out;
}

MeetJoin lattice_ops(const Diagram& d, ElementId x, ElementId y)
{
    const OrderIndex order(d);
    if (!order.is_lattice())
        throw PreconditionError("lattice_ops: diagram is not a lattice");
    return {order.meet(x, y), order.join(x, y)};
}

std::vector<ElementId> canonical_ids(const Diagram& d)
{
    const ElementId b = d.bottom();
    if (b == kNoElement)
        throw PreconditionError("canonical form needs a unique bottom");
    std::vector<ElementId> id(d.size(), kNoElement);
    std::deque<ElementId> queue{b};
    id[b] = 0;
    ElementId next = 1;
    while (!queue.empty())
    {
        const ElementId x = queue.front();
        queue.pop_front();
        for (ElementId y : d.upper(x))
        {
            if (id[y] == kNoElement)
            {
                id[y] = next++;
                queue.push_back(y);
            }
        }
    }
    if (next != d.size())
        throw PreconditionError("canonical form: some element is not above the bottom");
    return id;
}

Diagram canonical_form(const Diagram& d)
{
    return d.relabeled(canonical_ids(d));
}

CanonicalKey canonical_key(const Diagram& d)
{
    const Diagram c = canonical_form(d);
    std::string s = std::to_string(c.size());
    for (const auto* lists : {&c.upper_lists(), &c.lower_lists()})
    {
        s += '|';
        for (const auto& l : *lists)
        {
            for (ElementId y : l)
            {
                s += std::to_string(y);
                s += ',';
            }
            s += ';';
        }
    }
    return {std::move(s)};
}

bool is_similar(const Diagram& a, const Diagram& b)
{
    // Grow a bijection from the bottoms, matching ordered lists position by
    // position; any clash means no similarity map exists.
    if (a.size() != b.size() || a.bottom() == kNoElement || b.bottom() == kNoElement)
        return false;
    const int n = a.size();
    std::vector<ElementId> fwd(n, kNoElement);
    std::vector<ElementId> bwd(n, kNoElement);
    std::deque<ElementId> queue{a.bottom()};
    fwd[a.bottom()] = b.bottom();
    bwd[b.bottom()] = a.bottom();
    auto bind = [&](ElementId x, ElementId y) {
        if (fwd[x] == kNoElement && bwd[y] == kNoElement)
        {
            fwd[x] = y;
            bwd[y] = x;
            queue.push_back(x);
            return true;
        }
        return fwd[x] == y && bwd[y] == x;
    };
    while (!queue.empty())
    {
        const ElementId x = queue.front();
        queue.pop_front();
        const ElementId y = fwd[x];
        const auto ua = a.upper(x), ub = b.upper(y), la = a.lower(x), lb = b.lower(y);
        if (ua.size() != ub.size() || la.size() != lb.size())
            return false;
        for (std::size_t i = 0; i < ua.size(); ++i)
            if (!bind(ua[i], ub[i]))
                return false;
        for (std::size_t i = 0; i < la.size(); ++i)
            if (!bind(la[i], lb[i]))
                return false;
    }
    return std::find(fwd.begin(), fwd.end(), kNoElement) == fwd.end();
}

std::string key_hash(const CanonicalKey& key)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : key.bytes)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace latres

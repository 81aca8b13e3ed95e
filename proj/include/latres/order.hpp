#pragma once

#include "latres/diagram.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <vector>

namespace latres
{

using ElementSet = boost::dynamic_bitset<>;

/**
 * Order relation of a diagram's cover graph: reflexive down-sets and
 * up-sets as bitsets, plus meet/join tables when the order is a lattice.
 *
 * Requires ids in range and an acyclic cover graph (throws
 * PreconditionError otherwise).
 */
class OrderIndex
{
public:
    OrderIndex() = default;
    explicit OrderIndex(const Diagram& d);

    int size() const noexcept { return m_n; }

    bool leq(ElementId x, ElementId y) const { return m_down[y].test(x); }
    bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
    bool comparable(ElementId x, ElementId y) const { return leq(x, y) || leq(y, x); }

    const ElementSet& down(ElementId x) const { return m_down[x]; }
    const ElementSet& up(ElementId x) const { return m_up[x]; }

    /// Elements ordered so every element follows all of its lower covers.
    const std::vector<ElementId>& topological_order() const noexcept { return m_topo; }

    /// Length of the longest chain from a minimal element up to x.
    int height(ElementId x) const { return m_height[x]; }

    bool is_lattice() const noexcept { return m_is_lattice; }

    /// Greatest lower bound / least upper bound, if they exist.
    std::optional<ElementId> try_meet(ElementId x, ElementId y) const;
    std::optional<ElementId> try_join(ElementId x, ElementId y) const;

    /// Table lookups; precondition is_lattice().
    ElementId meet(ElementId x, ElementId y) const { return m_meet[x * m_n + y]; }
    ElementId join(ElementId x, ElementId y) const { return m_join[x * m_n + y]; }

private:
    int m_n = 0;
    std::vector<ElementSet> m_down;
    std::vector<ElementSet> m_up;
    std::vector<ElementId> m_topo;
    std::vector<int> m_height;
    std::vector<ElementId> m_meet;
    std::vector<ElementId> m_join;
    bool m_is_lattice = false;
};

std::vector<ElementId> to_vector(const ElementSet& s);

} // namespace latres

#pragma once

#include "latres/diagram.hpp"
#include "latres/order.hpp"

#include <optional>
#include <vector>

namespace latres
{

/// Directed traversal of one face boundary. Inner faces run clockwise:
/// up the left side from the bottom, then down the right side.
struct FaceWalk
{
    std::vector<ElementId> vertices; // vertices[i] -> vertices[i+1] (cyclic)
    int local_minima = 0;
    int local_maxima = 0;
};

/// Traces every face of the rotation system given by the cover lists
/// (clockwise around x: upper covers left to right, then lower covers right
/// to left). Requires mutually consistent upper/lower lists.
std::vector<FaceWalk> trace_faces(const Diagram& d);

/**
 * A minimal region. Both sides run from `bottom` to `top` inclusive; the
 * left side hugs the region from the left. A 4-cell has sides of length 3.
 */
struct Cell
{
    ElementId bottom = kNoElement;
    ElementId top = kNoElement;
    std::vector<ElementId> left_side;
    std::vector<ElementId> right_side;

    bool is_four_cell() const { return left_side.size() == 3 && right_side.size() == 3; }
    ElementId left_middle() const { return left_side[1]; }
    ElementId right_middle() const { return right_side[1]; }
    std::vector<ElementId> vertices() const;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/**
 * Planar structure of a well-formed diagram: order relation, boundary
 * chains, cells, and edge-to-cell incidence. Build once and share; it is
 * immutable after construction.
 */
class Embedding
{
public:
    /// Throws PreconditionError unless validate_well_formed(d) is empty.
    explicit Embedding(Diagram d);

    const Diagram& diagram() const noexcept { return m_diagram; }
    const OrderIndex& order() const noexcept { return m_order; }
    int size() const noexcept { return m_diagram.size(); }
    ElementId bottom() const noexcept { return m_diagram.bottom(); }
    ElementId top() const noexcept { return m_diagram.top(); }

    const std::vector<ElementId>& left_chain() const noexcept { return m_left_chain; }
    const std::vector<ElementId>& right_chain() const noexcept { return m_right_chain; }
    bool on_left_boundary(ElementId x) const { return m_on_left[x]; }
    bool on_right_boundary(ElementId x) const { return m_on_right[x]; }
    bool on_boundary(ElementId x) const { return m_on_left[x] || m_on_right[x]; }
    bool is_interior(ElementId x) const { return !on_boundary(x); }

    /// Edge lies on the left (right) boundary chain.
    bool on_left_boundary(PrimeInterval e) const;
    bool on_right_boundary(PrimeInterval e) const;

    const std::vector<Cell>& cells() const noexcept { return m_cells; }

    /// Cell to the right of the upward edge (edge on that cell's left side).
    std::optional<int> cell_right_of(PrimeInterval e) const;
    /// Cell to the left of the upward edge (edge on that cell's right side).
    std::optional<int> cell_left_of(PrimeInterval e) const;

    int edge_index(PrimeInterval e) const; // -1 when not a cover
    int edge_count() const noexcept { return static_cast<int>(m_edges.size()); }
    const std::vector<PrimeInterval>& edges() const noexcept { return m_edges; }

    bool is_meet_irreducible(ElementId x) const { return m_diagram.upper(x).size() == 1; }
    bool is_join_irreducible(ElementId x) const { return m_diagram.lower(x).size() == 1; }

private:
    Diagram m_diagram;
    OrderIndex m_order;
    std::vector<ElementId> m_left_chain;
    std::vector<ElementId> m_right_chain;
    std::vector<bool> m_on_left;
    std::vector<bool> m_on_right;
    std::vector<Cell> m_cells;
    std::vector<PrimeInterval> m_edges;
    std::vector<int> m_edge_offset;
    std::vector<int> m_cell_right;
    std::vector<int> m_cell_left;
};

/// Leftmost / rightmost maximal chains from the bottom.
std::vector<ElementId> leftmost_chain(const Diagram& d);
std::vector<ElementId> rightmost_chain(const Diagram& d);

/// Cell form of a clockwise inner-face walk.
Cell cell_from_walk(const Diagram& d, const FaceWalk& w);

} // namespace latres

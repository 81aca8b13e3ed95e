#pragma once

#include "latres/diagram.hpp"
#include "latres/embedding.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace latres
{

enum class TrajectoryKind
{
    C2,
    C3,
};

enum class Side
{
    Left,
    Right,
};

// Direction of a left-to-right step between consecutive links.
enum class Step
{
    Up,
    Down,
};

using VertexSet = std::vector<ElementId>; // sorted

std::vector<Cell> cells(const Diagram& d);

/// Every cell is a 4-cell and no two 4-cells share a bottom.
bool check_gk_criterion(const Embedding& e);
bool check_gk_criterion(const Diagram& d);

/// Cover-preserving four-element Boolean sublattices, as sorted vertex sets.
std::vector<VertexSet> covering_squares(const Embedding& e);
std::vector<VertexSet> four_cells(const Embedding& e);

/**
 * A C2-trajectory (links are prime intervals) or a C3-trajectory (links are
 * cover-preserving 3-chains), ordered left to right. steps[i] is the
 * direction from link i to link i+1.
 */
struct Trajectory
{
    TrajectoryKind kind = TrajectoryKind::C2;
    std::vector<PrimeInterval> intervals;
    std::vector<C3Chain> chains;
    std::vector<Step> steps;
    /// Index of the link where the trajectory starts going down.
    std::optional<std::size_t> turn_index;

    std::size_t size() const
    {
        return kind == TrajectoryKind::C2 ? intervals.size() : chains.size();
    }
    bool is_hat() const { return turn_index.has_value(); }
};

/// Neighbouring link across a 4-cell; the Step is always the left-to-right
/// direction between the two links. Throws PreconditionError when the
/// adjacent cell exists but is not a 4-cell.
std::optional<std::pair<PrimeInterval, Step>> right_neighbor(const Embedding& e, PrimeInterval p);
std::optional<std::pair<PrimeInterval, Step>> left_neighbor(const Embedding& e, PrimeInterval p);
std::optional<std::pair<C3Chain, Step>> right_neighbor(const Embedding& e, const C3Chain& c);
std::optional<std::pair<C3Chain, Step>> left_neighbor(const Embedding& e, const C3Chain& c);

/// Unique maximal trajectory through `start`. Precondition: check_gk_criterion.
Trajectory trajectory(const Embedding& e, PrimeInterval start);
Trajectory trajectory(const Embedding& e, const C3Chain& start);

/// Links from the leftmost (Side::Left) or up to the rightmost
/// (Side::Right) end, including `start`, in left-to-right order.
std::vector<PrimeInterval> wing(const Embedding& e, PrimeInterval start, Side side);
std::vector<C3Chain> wing(const Embedding& e, const C3Chain& start, Side side);

/// All cover-preserving 3-chains of the diagram.
std::vector<C3Chain> c3_chains(const Diagram& d);

bool on_boundary(const Embedding& e, const C3Chain& c, Side side);

} // namespace latres

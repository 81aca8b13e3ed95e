#pragma once

#include "latres/embedding.hpp"
#include "latres/geometry.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace latres
{

/// Tight N7 around a centre u: [a_l,b_l], [u,u_star], [a_r,b_r] are
/// consecutive prime intervals and bottom = a_l ∧ a_r.
struct TightN7
{
    ElementId u = kNoElement;
    ElementId u_star = kNoElement;
    ElementId a_l = kNoElement;
    ElementId b_l = kNoElement;
    ElementId a_r = kNoElement;
    ElementId b_r = kNoElement;
    ElementId bottom = kNoElement;

    /// bottom ≺ a_l and bottom ≺ a_r.
    bool cover_preserving = false;

    VertexSet elements() const;
};

/// Non-throwing variant: nullopt unless u is interior and meet-irreducible
/// and both cells on [u,u*] are 4-cells.
std::optional<TightN7> try_tight_n7(const Embedding& e, ElementId u);
TightN7 tight_n7(const Embedding& e, ElementId u);

/// Centres of cover-preserving N7 sublattices (= anchors of C2-schemes).
std::vector<ElementId> covering_n7_centers(const Embedding& e);

struct Rank
{
    int value = 0;

    friend auto operator<=>(const Rank&, const Rank&) = default;
};

/// x(0) = x, x(i+1) = x(i)* while x(i)* is meet-irreducible, interior and
/// covers exactly three elements. Defined for any interior meet-irreducible x.
std::vector<ElementId> tower_walk(const Embedding& e, ElementId x);

/// Precondition: x is a C2-anchor.
Rank rank(const Embedding& e, ElementId x);

/// Largest k such that x is the lowest interior element of a cover-preserving
/// k-stacked N7 sublattice, found by exhaustive sublattice search.
Rank rank_by_regions(const Embedding& e, ElementId x);

struct StackedN7Region
{
    int m = 0;
    VertexSet elements;                 // 7 + 3m ids
    std::vector<ElementId> interior_tower; // x(0) ≺ ... ≺ x(m)
    ElementId bottom = kNoElement;
    ElementId top = kNoElement;
};

/// R_0 .. R_rank for a C2-anchor u.
std::vector<StackedN7Region> stacked_tower(const Embedding& e, ElementId u);

struct StackLocation
{
    StackedN7Region region; // the maximal region of the tower
    int index = 0;          // t = x(index)
};

std::optional<StackLocation> locate_in_stack(const Embedding& e, ElementId t);

/**
 * A C2- or C3-scheme: base (cover-preserving N7 resp. C3²) plus the wings
 * of the base's upper-left and upper-right boundary links.
 *
 * Wings are listed left to right; the left wing ends with the base's
 * upper-left link and the right wing starts with its upper-right link.
 */
struct Scheme
{
    TrajectoryKind kind = TrajectoryKind::C2;
    ElementId anchor = kNoElement;
    VertexSet base;

    std::vector<PrimeInterval> left_intervals; // C2
    std::vector<PrimeInterval> right_intervals;
    std::vector<C3Chain> left_chains; // C3
    std::vector<C3Chain> right_chains;
    std::vector<Step> left_steps;
    std::vector<Step> right_steps;

    std::vector<int> region_cells; // indices into Embedding::cells()
    VertexSet elements;
    VertexSet upper_boundary;
    VertexSet lower_boundary;
    VertexSet interior;

    std::size_t wing_link_count() const;
};

/// Base of a C3-scheme around u, if u is the centre of a cover-preserving C3².
struct C3Base
{
    ElementId bottom, left_low, right_low, left_corner, center, right_corner, left_high,
        right_high, top;

    C3Chain upper_left() const { return {left_corner, left_high, top}; }
    C3Chain upper_right() const { return {right_corner, right_high, top}; }
    VertexSet elements() const;
};
std::optional<C3Base> c3_base(const Embedding& e, ElementId u);

/// anchors(D, C2) = covering_n7_centers; anchors(D, C3) = centres of
/// cover-preserving C3² whose wings end on the boundary and do not overlap.
std::vector<ElementId> anchors(const Embedding& e, TrajectoryKind kind);

struct RejectedAnchor
{
    ElementId element;
    std::string reason;
};

/// C3² centres that are not C3-anchors, with the reason (inspection aid).
std::vector<RejectedAnchor> rejected_c3_anchors(const Embedding& e);

Scheme scheme(const Embedding& e, ElementId u, TrajectoryKind kind);

/// As scheme(), without requiring the cell criterion; throws
/// PreconditionError wherever the construction is not well defined.
Scheme scheme_unchecked(const Embedding& e, ElementId u, TrajectoryKind kind);

} // namespace latres

#pragma once

#include "latres/diagram.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latres
{

enum class Violation
{
    DegenerateSize,
    IdOutOfRange,
    DuplicateCover,
    InconsistentLists,
    Acyclic,
    TransitivelyReduced,
    UniqueTop,
    UniqueBottom,
    Lattice,
    Planar,
};

const char* violation_name(Violation v);

struct ValidationIssue
{
    Violation kind;
    std::string detail;
};

struct ValidationReport
{
    std::vector<ValidationIssue> issues;

    bool ok() const noexcept { return issues.empty(); }
    bool has(Violation v) const;
    std::string summary() const;
};

/// Checks every Diagram invariant; an empty report means well formed.
/// Diagrams with fewer than two elements are reported as DegenerateSize.
ValidationReport validate_well_formed(const Diagram& d);

struct BoundaryChains
{
    std::vector<ElementId> left;
    std::vector<ElementId> right;
};

BoundaryChains boundary_chains(const Diagram& d);

struct Irreducibles
{
    std::vector<ElementId> join_irreducible;
    std::vector<ElementId> meet_irreducible;
    std::vector<ElementId> doubly_irreducible;
};

Irreducibles irreducibles(const Diagram& d);

struct MeetJoin
{
    ElementId meet;
    ElementId join;
};

/// Precondition: d is a lattice.
MeetJoin lattice_ops(const Diagram& d, ElementId x, ElementId y);

/// Canonical serialization of a diagram up to similarity.
struct CanonicalKey
{
    std::string bytes;

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// canonical_ids(d)[x] is x's position in a breadth-first traversal from the
/// bottom that visits upper covers left to right.
std::vector<ElementId> canonical_ids(const Diagram& d);
Diagram canonical_form(const Diagram& d);
CanonicalKey canonical_key(const Diagram& d);
bool is_similar(const Diagram& a, const Diagram& b);

/// Stable 64-bit FNV-1a of the key bytes, as 16 lowercase hex digits.
std::string key_hash(const CanonicalKey& key);

} // namespace latres

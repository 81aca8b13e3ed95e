#pragma once

#include "latres/constructions.hpp"
#include "latres/diagram.hpp"
#include "latres/embedding.hpp"
#include "latres/geometry.hpp"

#include <string>
#include <vector>

namespace latres
{

enum class SurgeryOp
{
    Resect,
    Insert,
    RemoveDi,
    RemoveCorner,
};

const char* op_name(SurgeryOp op);

/// One line of a trace file: `<op> <anchor> removed=[ids] added=<k>`.
/// `anchor` and `removed` use the ids of the diagram the operation was
/// applied to.
struct SurgeryRecord
{
    SurgeryOp op = SurgeryOp::Resect;
    ElementId anchor = kNoElement;
    std::vector<ElementId> removed;
    int added = 0;

    std::string to_line() const;
    static SurgeryRecord parse(const std::string& line);

    friend bool operator==(const SurgeryRecord&, const SurgeryRecord&) = default;
};

/**
 * Result of a surgery. Elements that survive an operation are renumbered
 * in increasing order of their old ids; new elements are appended.
 * id_map[old] is the new id, or kNoElement for a removed element.
 */
struct SurgeryResult
{
    Diagram diagram;
    SurgeryRecord record;
    std::vector<ElementId> id_map;
};

/// Precondition: slim distributive; x doubly irreducible on a boundary chain.
SurgeryResult remove_boundary_di(const Diagram& d, ElementId x);

/// Adds a doubly irreducible element x with p ≺ x ≺ q as the leftmost
/// (Side::Left) or rightmost new cover, where p < q lie on that boundary
/// chain. Inverse of remove_boundary_di.
Diagram add_boundary_di(const Diagram& d, ElementId p, ElementId q, Side side);

std::vector<ElementId> weak_corners(const Diagram& d);
std::vector<ElementId> corners(const Diagram& d);
bool is_rectangular(const Diagram& d);

/// Precondition: check_gk_criterion; x a corner.
SurgeryResult remove_corner(const Diagram& d, ElementId x);

/// Precondition: u is a C3-anchor.
SurgeryResult resect(const Embedding& e, ElementId u);
SurgeryResult resect(const Diagram& d, ElementId u);

/// Precondition: u is a C2-anchor.
SurgeryResult insert(const Embedding& e, ElementId u);
SurgeryResult insert(const Diagram& d, ElementId u);

/// Insertion without the slimness precondition, for the sequence test.
/// Throws PreconditionError when the scheme is not well defined at u.
SurgeryResult insert_unchecked(const Embedding& e, ElementId u);

/// Applies a recorded operation to the diagram it was recorded on.
SurgeryResult replay(const Diagram& d, const SurgeryRecord& r);

} // namespace latres

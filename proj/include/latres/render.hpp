#pragma once

#include "latres/diagram.hpp"
#include "latres/geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latres
{

enum class RenderFormat
{
    Dot,
    Svg,
};

struct Overlay
{
    enum class Kind
    {
        Cells,
        Trajectories,
        Scheme,
        Stacked,
        Anchors,
    };

    Kind kind = Kind::Cells;
    ElementId anchor = kNoElement; // Scheme, Stacked
    /// Scheme only; unset means C3 if the anchor is a C3-anchor, else C2.
    std::optional<TrajectoryKind> scheme_kind;
};

/// Accepts `cells`, `trajectories`, `anchors`, `stacked(<id>)`,
/// `scheme(<id>)` and `scheme(<id>,2|3)`; `name:<args>` works too.
/// Throws PreconditionError on anything else.
Overlay parse_overlay(std::string_view text);

struct RenderSpec
{
    RenderFormat format = RenderFormat::Dot;
    std::vector<Overlay> overlays;
};

struct Point
{
    int x = 0;
    int y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Layered drawing: y is the height, and the horizontal position is the
/// number of right-boundary join-irreducibles below an element minus the
/// number of left ones, pushed apart where a layer would collide. Units are
/// half a column; pos[x] is indexed by element id of d.
std::vector<Point> layered_layout(const Diagram& d);

/**
 * Draws a well-formed diagram. The drawing is made from the canonical form,
 * and nodes are labelled with canonical ids, so similar inputs give
 * byte-identical output. Overlay anchors are ids of `d` and must exist.
 *
 * Conventions: bases shaded gray, scheme interiors black, anchors circled,
 * stacked regions tinted, trajectories coloured per trajectory.
 */
std::string render(const Diagram& d, const RenderSpec& spec);

} // namespace latres

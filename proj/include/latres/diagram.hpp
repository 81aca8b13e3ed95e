#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace latres
{

using ElementId = int;
inline constexpr ElementId kNoElement = -1;

using CoverLists = std::vector<std::vector<ElementId>>;

/**
 * An embedded (planar) Hasse diagram, up to similarity.
 *
 * Each element stores its upper covers and its lower covers, both ordered
 * left to right. No coordinates are kept; the two orders determine the
 * embedding. A Diagram is immutable once built; surgery returns new ones.
 *
 * Construction does not check well-formedness, so arbitrary candidate
 * structures can be handed to validate_well_formed().
 */
class Diagram
{
public:
    Diagram() = default;
    Diagram(CoverLists upper, CoverLists lower);

    int size() const noexcept { return static_cast<int>(m_upper.size()); }
    bool empty() const noexcept { return m_upper.empty(); }

    std::span<const ElementId> upper(ElementId x) const { return m_upper[x]; }
    std::span<const ElementId> lower(ElementId x) const { return m_lower[x]; }
    const CoverLists& upper_lists() const noexcept { return m_upper; }
    const CoverLists& lower_lists() const noexcept { return m_lower; }

    /// Unique element with no upper (lower) covers, or kNoElement.
    ElementId top() const noexcept { return m_top; }
    ElementId bottom() const noexcept { return m_bottom; }

    bool covers(ElementId lo, ElementId hi) const;
    std::size_t edge_count() const noexcept;

    /// Same element ids, upper and lower lists mirrored.
    Diagram mirrored() const;

    /// Relabel: element x becomes new_id[x]. `new_id` must be a permutation.
    Diagram relabeled(std::span<const ElementId> new_id) const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    CoverLists m_upper;
    CoverLists m_lower;
    ElementId m_top = kNoElement;
    ElementId m_bottom = kNoElement;
};

/// Prime interval: `top` covers `bottom`.
struct PrimeInterval
{
    ElementId bottom = kNoElement;
    ElementId top = kNoElement;

    friend auto operator<=>(const PrimeInterval&, const PrimeInterval&) = default;
};

/// Chain of length 2 in the cover graph: bottom < middle < top, both covers.
struct C3Chain
{
    ElementId bottom = kNoElement;
    ElementId middle = kNoElement;
    ElementId top = kNoElement;

    friend auto operator<=>(const C3Chain&, const C3Chain&) = default;
};

std::string to_string(const PrimeInterval& p);
std::string to_string(const C3Chain& c);

} // namespace latres

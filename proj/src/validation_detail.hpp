#pragma once

#include "latres/core.hpp"
#include "latres/embedding.hpp"
#include "latres/order.hpp"

#include <optional>
#include <vector>

namespace latres::detail
{

/// validate_well_formed, handing back the order index and face walks it
/// built along the way (each set only if that stage was reached).
ValidationReport validate_well_formed(const Diagram& d, std::optional<OrderIndex>& order,
                                      std::vector<FaceWalk>& faces);

} // namespace latres::detail

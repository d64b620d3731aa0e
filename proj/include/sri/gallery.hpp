#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sri/semiring.hpp"

namespace sri {

/// The built-in corpus of small validated semirings:
///   B            two-element Boolean lattice (max, min)
///   L3..L6       total-order chains under (max, min)
///   N2..N4       saturating naturals {0..k} with a+b, a*b capped at k
///   Z2,Z3,Z4,Z6  integers modulo n
///   T3           min-plus levels {inf,0,1,2}: min as +, capped addition as *
///   BxB, BxL3, L3xL3, N2xB   direct products
/// Every member passes validation; order is fixed.
const std::vector<SemiringPtr>& gallery();

std::vector<std::string> gallery_names();

/// Case-sensitive lookup by name; throws parse error for unknown names.
SemiringPtr gallery_find(std::string_view name);

} // namespace sri

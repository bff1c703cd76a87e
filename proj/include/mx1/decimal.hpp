#pragma once

#include <string>

#include "mx1/core_map.hpp"

namespace mx1 {

/// Renders a nonnegative rational to `digits` significant digits, rounding
/// half to even. Fixed notation for values >= 1e-4 ("0.0625"), scientific
/// below that ("1.0837e-17"). Trailing zeros are dropped.
std::string render_decimal(const BigRational& value, unsigned digits = 8);

}  // namespace mx1

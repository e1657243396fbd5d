#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "linkinv/arith.hpp"

namespace linkinv {

/// Strict decimal integer: optional '-', digits only, surrounding blanks
/// ignored. Throws UsageError naming `what` and the offending token.
Int parse_integer(std::string_view text, std::string_view what);

/// Comma-separated integers, e.g. "1,2,3".
std::vector<Int> parse_integer_list(std::string_view text, std::string_view what);

/// Inclusive range "A..B" with A <= B; a single integer "A" means A..A.
std::pair<Int, Int> parse_range(std::string_view text, std::string_view what);

std::string_view trim(std::string_view text);

} // namespace linkinv

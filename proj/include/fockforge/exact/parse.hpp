#pragma once

#include <string_view>

#include "fockforge/exact/rational_function.hpp"

namespace fockforge::exact {

/// Parses the canonical grammar: integer literals, variable names from
/// `vars`, `+ - * /`, `^` to nonnegative integer powers, parentheses.
/// Throws std::invalid_argument on malformed input.
RationalFunction parse_rational_function(std::string_view text, const VarSpec& vars);

}  // namespace fockforge::exact

#pragma once

#include <string>
#include <vector>

#include "singcomb/algebra/polynomial.hpp"

namespace singcomb::algebra {

// Parses an expression over `+ - * ^ ( )` with integer/rational literals
// and the declared variable names, expanding to canonical sparse form.
// Exponents must be non-negative integers. Throws ParseError with the
// 0-based character position on malformed input, unknown variables, or
// negative exponents.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

}  // namespace singcomb::algebra

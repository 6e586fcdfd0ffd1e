#pragma once

#include <string>

#include "plurikit/poly.hpp"

namespace plurikit {

// Expression parser for polynomials over Q(kappa). Accepts integers, "k"
// for the formal parameter, variables ("t12", "t_1_2", "s1", "x21",
// "u1_1_2", vector shorthand "u1_2" for row 1), +, -, *, /, ^ and
// parentheses. Division requires a variable-free divisor.
Poly parse_poly(const std::string& src, const Ambient& ambient);

// Same grammar restricted to variable-free expressions.
KappaRational parse_kappa(const std::string& src);

}  // namespace plurikit

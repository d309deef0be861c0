#pragma once

#include <string>

#include "svf/field.hpp"
#include "svf/poly.hpp"

namespace svf {

/// Canonical text form: terms in descending graded-lex order, explicit `*`
/// between factors, `^` for even powers, "0" for zero. parse_poly inverts it.
std::string print_poly(const SuperPolynomial& f);

/// Canonical text form: one `coeff*d(var)` term per nonzero slot in
/// declaration order, multi-term coefficients parenthesized. parse_field
/// inverts it.
std::string print_field(const VectorField& x);

} // namespace svf

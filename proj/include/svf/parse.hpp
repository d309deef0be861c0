#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "svf/errors.hpp"
#include "svf/field.hpp"
#include "svf/poly.hpp"

namespace svf {

/// Byte range [begin, end) into the input text.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, SourceSpan span,
               std::vector<std::string> expected = {})
        : Error(message), span_(span), expected_(std::move(expected)) {}

    const SourceSpan& span() const { return span_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    SourceSpan span_;
    std::vector<std::string> expected_;
};

/// Grammar (precedence low to high): sum/difference; product with explicit
/// `*` or juxtaposition (juxtaposition never involves a numeric literal:
/// `2*t`, not `2t`); `^` with a nonnegative integer exponent, allowed on even
/// variables and parenthesized even subexpressions only; atoms are rational
/// literals (`3`, `-2/5` via unary minus), variable names, and parenthesized
/// expressions.
SuperPolynomial parse_poly(std::string_view text, const SigPtr& sig);

/// Sums of `<coeff> * d(<var>)` terms; bare `d(var)` allowed; "0" is the
/// zero field. Coefficients follow the polynomial grammar (products only;
/// parenthesize sums).
VectorField parse_field(std::string_view text, const SigPtr& sig);

} // namespace svf

#pragma once

#include <gmpxx.h>

#include <string>

#include "svf/errors.hpp"

namespace svf {

/// Exact arbitrary-precision rational scalar. All coefficient arithmetic in
/// the library is exact; there is no floating point anywhere.
using Rational = mpq_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does NOT
/// canonicalize, and GMP comparisons assume canonical form — always build
/// fractions through this helper (or from canonical inputs).
inline Rational make_rational(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws Error on
/// anything else; the empty string and stray characters are rejected.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    bool digits = false, slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            digits = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw Error("malformed rational literal: '" + text + "'");
        }
    }
    if (!digits) throw Error("malformed rational literal: '" + text + "'");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw Error("malformed rational literal: '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw Error("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

} // namespace svf

#include "svf/print.hpp"

namespace svf {

namespace {

/// "t1^2*theta1*theta2" or "" for the constant monomial.
std::string monomial_body(const Monomial& m, const Signature& sig) {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += "*";
        out += piece;
    };
    for (std::size_t i = 0; i < sig.even_count; ++i) {
        unsigned k = m.even_exponents[i];
        if (k == 0) continue;
        std::string piece = sig.even_names[i];
        if (k > 1) piece += "^" + std::to_string(k);
        append(piece);
    }
    for (unsigned j : m.odd_indices()) append(sig.odd_names[j - 1]);
    return out;
}

/// Term with positive-looking layout: caller folds the sign into the
/// separator, so c is passed as a magnitude.
std::string term_text(const Monomial& m, const Rational& c, const Signature& sig) {
    std::string body = monomial_body(m, sig);
    if (body.empty()) return rational_to_string(c);
    if (c == 1) return body;
    return rational_to_string(c) + "*" + body;
}

} // namespace

std::string print_poly(const SuperPolynomial& f) {
    if (f.is_zero()) return "0";
    const Signature& sig = *f.signature();
    std::string out;
    // Map order is ascending graded-lex; print largest first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += term_text(m, mag, sig);
    }
    return out;
}

std::string print_field(const VectorField& x) {
    if (x.is_zero()) return "0";
    const Signature& sig = *x.signature();
    std::string out;
    for (std::size_t slot = 0; slot < sig.slot_count(); ++slot) {
        const SuperPolynomial& coeff = x.coefficient(slot);
        if (coeff.is_zero()) continue;
        std::string d = "d(" + sig.slot_name(slot) + ")";
        std::string term;
        if (coeff == SuperPolynomial::constant(coeff.signature(), 1)) {
            term = d;
        } else if (coeff == SuperPolynomial::constant(coeff.signature(), -1)) {
            term = "-" + d;
        } else if (coeff.term_count() == 1) {
            term = print_poly(coeff) + "*" + d;
        } else {
            term = "(" + print_poly(coeff) + ")*" + d;
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

} // namespace svf

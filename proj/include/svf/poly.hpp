#pragma once

#include <map>
#include <optional>

#include "svf/monomial.hpp"
#include "svf/rational.hpp"
#include "svf/signature.hpp"

namespace svf {

/// Kind of coordinate direction, for derivative operations.
enum class VarKind { Even, Odd };

/// Sparse element of the free supercommutative algebra with exact rational
/// coefficients. Terms are kept in a canonical normal form: odd factors in
/// increasing index order (signs absorbed at construction) and no stored
/// zero coefficients. The zero polynomial is the empty map.
class SuperPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit SuperPolynomial(SigPtr sig) : sig_(std::move(sig)) {}

    static SuperPolynomial zero(SigPtr sig) { return SuperPolynomial(std::move(sig)); }

    static SuperPolynomial constant(SigPtr sig, Rational c) {
        SuperPolynomial p(std::move(sig));
        p.add_term(Monomial::one(p.sig_->even_count), std::move(c));
        return p;
    }

    /// t_i, 1-based.
    static SuperPolynomial even_variable(SigPtr sig, std::size_t i);
    /// theta_j, 1-based.
    static SuperPolynomial odd_variable(SigPtr sig, std::size_t j);
    /// Coordinate polynomial for a flat slot (0-based over r+s).
    static SuperPolynomial coordinate(SigPtr sig, std::size_t slot);

    const SigPtr& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulates c * m, dropping the term if the sum cancels to zero.
    void add_term(const Monomial& m, Rational c);

    SuperPolynomial& operator+=(const SuperPolynomial& other);
    SuperPolynomial& operator-=(const SuperPolynomial& other);
    SuperPolynomial operator-() const;
    SuperPolynomial& operator*=(const Rational& c);

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) { return mul(a, b); }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& c) { return a *= c; }
    friend SuperPolynomial operator*(const Rational& c, SuperPolynomial a) { return a *= c; }

    /// Supercommutative product; odd factors are merged into increasing
    /// order with the Koszul sign, repeated odd factors annihilate the term.
    static SuperPolynomial mul(const SuperPolynomial& a, const SuperPolynomial& b);

    bool operator==(const SuperPolynomial& other) const {
        return same_signature(sig_, other.sig_) && terms_ == other.terms_;
    }

    /// Parity of the polynomial when all monomials agree; nullopt when the
    /// polynomial mixes parities. Zero is reported as Even.
    std::optional<Parity> parity() const;
    bool is_parity_homogeneous(Parity q) const;
    /// The sum of the monomials of parity q.
    SuperPolynomial parity_part(Parity q) const;

    /// Degree queries reject the zero polynomial: it has no degree.
    unsigned min_total_degree() const;
    unsigned max_total_degree() const;
    /// Sum of the terms of minimal total degree (homogeneous by construction).
    SuperPolynomial min_degree_part() const;
    /// Sum of the terms of total degree exactly d (possibly zero).
    SuperPolynomial degree_part(unsigned d) const;

    /// Left partial derivative in the given direction. Even directions are
    /// the ordinary partial; odd directions use the left-derivative sign
    /// (-1)^(position-1) fixed for the whole library.
    SuperPolynomial partial(std::size_t index, VarKind kind) const;

    /// Ring morphism onto scalars: substitute the even coordinates of p and
    /// send every odd variable to zero.
    Rational evaluate(const Point& p) const;

    /// Recentering substitution t_i -> t_i + p_i; odd part unaffected.
    SuperPolynomial translate(const Point& p) const;

    /// Constant coefficient (zero if absent).
    Rational constant_term() const;

private:
    SigPtr sig_;
    TermMap terms_;
};

} // namespace svf

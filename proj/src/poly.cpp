#include "svf/poly.hpp"

#include <bit>

namespace svf {

SuperPolynomial SuperPolynomial::even_variable(SigPtr sig, std::size_t i) {
    if (i < 1 || i > sig->even_count) throw IndexError("even variable index out of range");
    Monomial m = Monomial::one(sig->even_count);
    m.even_exponents[i - 1] = 1;
    SuperPolynomial p(std::move(sig));
    p.add_term(m, Rational(1));
    return p;
}

SuperPolynomial SuperPolynomial::odd_variable(SigPtr sig, std::size_t j) {
    if (j < 1 || j > sig->odd_count) throw IndexError("odd variable index out of range");
    Monomial m = Monomial::one(sig->even_count);
    m.odd_mask = std::uint32_t{1} << (j - 1);
    SuperPolynomial p(std::move(sig));
    p.add_term(m, Rational(1));
    return p;
}

SuperPolynomial SuperPolynomial::coordinate(SigPtr sig, std::size_t slot) {
    if (slot >= sig->slot_count()) throw IndexError("coordinate slot out of range");
    return slot < sig->even_count ? even_variable(sig, slot + 1)
                                  : odd_variable(std::move(sig), slot - sig->even_count + 1);
}

void SuperPolynomial::add_term(const Monomial& m, Rational c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& other) {
    require_same_signature(sig_, other.sig_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& other) {
    require_same_signature(sig_, other.sig_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial out(sig_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

SuperPolynomial SuperPolynomial::mul(const SuperPolynomial& a, const SuperPolynomial& b) {
    require_same_signature(a.sig_, b.sig_);
    SuperPolynomial out(a.sig_);
    const std::size_t r = a.sig_->even_count;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            int sign = odd_merge_sign(ma.odd_mask, mb.odd_mask);
            if (sign == 0) continue;
            Monomial m = Monomial::one(r);
            for (std::size_t i = 0; i < r; ++i)
                m.even_exponents[i] = ma.even_exponents[i] + mb.even_exponents[i];
            m.odd_mask = ma.odd_mask | mb.odd_mask;
            Rational c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(m, std::move(c));
        }
    }
    return out;
}

std::optional<Parity> SuperPolynomial::parity() const {
    if (terms_.empty()) return Parity::Even;
    Parity q = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != q) return std::nullopt;
    return q;
}

bool SuperPolynomial::is_parity_homogeneous(Parity q) const {
    for (const auto& [m, c] : terms_)
        if (m.parity() != q) return false;
    return true;
}

SuperPolynomial SuperPolynomial::parity_part(Parity q) const {
    SuperPolynomial out(sig_);
    for (const auto& [m, c] : terms_)
        if (m.parity() == q) out.terms_.emplace(m, c);
    return out;
}

unsigned SuperPolynomial::min_total_degree() const {
    if (terms_.empty()) throw ZeroInputError("the zero polynomial has no degree");
    // MonomialOrder is graded, so the first key has minimal total degree.
    return terms_.begin()->first.total_degree();
}

unsigned SuperPolynomial::max_total_degree() const {
    if (terms_.empty()) throw ZeroInputError("the zero polynomial has no degree");
    return terms_.rbegin()->first.total_degree();
}

SuperPolynomial SuperPolynomial::min_degree_part() const {
    unsigned d = min_total_degree();
    return degree_part(d);
}

SuperPolynomial SuperPolynomial::degree_part(unsigned d) const {
    SuperPolynomial out(sig_);
    for (const auto& [m, c] : terms_) {
        unsigned dm = m.total_degree();
        if (dm > d) break;
        if (dm == d) out.terms_.emplace(m, c);
    }
    return out;
}

SuperPolynomial SuperPolynomial::partial(std::size_t index, VarKind kind) const {
    SuperPolynomial out(sig_);
    if (kind == VarKind::Even) {
        if (index < 1 || index > sig_->even_count) throw IndexError("even direction out of range");
        const std::size_t i = index - 1;
        for (const auto& [m, c] : terms_) {
            unsigned k = m.even_exponents[i];
            if (k == 0) continue;
            Monomial dm = m;
            dm.even_exponents[i] = k - 1;
            out.add_term(dm, c * Rational(static_cast<long>(k)));
        }
    } else {
        if (index < 1 || index > sig_->odd_count) throw IndexError("odd direction out of range");
        const std::uint32_t bit = std::uint32_t{1} << (index - 1);
        for (const auto& [m, c] : terms_) {
            if (!(m.odd_mask & bit)) continue;
            // Left derivative: moving theta_j to the front passes the
            // (position-1) factors before it.
            int below = std::popcount(m.odd_mask & (bit - 1));
            Monomial dm = m;
            dm.odd_mask &= ~bit;
            out.add_term(dm, (below & 1) ? -c : c);
        }
    }
    return out;
}

Rational SuperPolynomial::evaluate(const Point& p) const {
    require_point_matches(p, *sig_);
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        if (m.odd_mask != 0) continue; // odd part dies at closed points
        Rational v = c;
        for (std::size_t i = 0; i < sig_->even_count; ++i) {
            for (unsigned k = 0; k < m.even_exponents[i]; ++k) v *= p.even_coords[i];
        }
        acc += v;
    }
    return acc;
}

SuperPolynomial SuperPolynomial::translate(const Point& p) const {
    require_point_matches(p, *sig_);
    SuperPolynomial out(sig_);
    const std::size_t r = sig_->even_count;
    for (const auto& [m, c] : terms_) {
        // Expand prod_i (t_i + p_i)^{k_i} term by term over the binomials.
        SuperPolynomial acc(sig_);
        Monomial seed = Monomial::one(r);
        seed.odd_mask = m.odd_mask;
        acc.add_term(seed, c);
        for (std::size_t i = 0; i < r; ++i) {
            unsigned k = m.even_exponents[i];
            if (k == 0) continue;
            if (p.even_coords[i] == 0) {
                SuperPolynomial shifted(sig_);
                for (const auto& [am, ac] : acc.terms_) {
                    Monomial nm = am;
                    nm.even_exponents[i] += k;
                    shifted.add_term(nm, ac);
                }
                acc = std::move(shifted);
                continue;
            }
            // (t_i + p_i)^k = sum_l C(k,l) p_i^{k-l} t_i^l
            std::vector<Rational> coeffs(k + 1);
            Rational binom(1);
            Rational power(1);
            for (unsigned l = k + 1; l-- > 0;) {
                coeffs[l] = binom * power;
                power *= p.even_coords[i];
                if (l > 0) {
                    binom *= Rational(static_cast<long>(l));
                    binom /= Rational(static_cast<long>(k - l + 1));
                }
            }
            SuperPolynomial shifted(sig_);
            for (const auto& [am, ac] : acc.terms_) {
                for (unsigned l = 0; l <= k; ++l) {
                    if (coeffs[l] == 0) continue;
                    Monomial nm = am;
                    nm.even_exponents[i] += l;
                    shifted.add_term(nm, ac * coeffs[l]);
                }
            }
            acc = std::move(shifted);
        }
        out += acc;
    }
    return out;
}

Rational SuperPolynomial::constant_term() const {
    if (terms_.empty()) return Rational(0);
    const auto& [m, c] = *terms_.begin();
    return m.total_degree() == 0 ? c : Rational(0);
}

} // namespace svf

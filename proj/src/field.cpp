#include "svf/field.hpp"

#include <limits>

namespace svf {

VectorField VectorField::coordinate(SigPtr sig, std::size_t slot) {
    VectorField x(std::move(sig));
    if (slot >= x.slot_count()) throw IndexError("coordinate slot out of range");
    x.coeffs_[slot] = SuperPolynomial::constant(x.sig_, Rational(1));
    return x;
}

void VectorField::set_coefficient(std::size_t slot, SuperPolynomial coeff) {
    require_same_signature(sig_, coeff.signature());
    coeffs_.at(slot) = std::move(coeff);
}

bool VectorField::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

VectorField& VectorField::operator+=(const VectorField& other) {
    require_same_signature(sig_, other.sig_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
    require_same_signature(sig_, other.sig_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

VectorField VectorField::operator-() const {
    VectorField out(sig_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

VectorField& VectorField::operator*=(const Rational& c) {
    for (auto& u : coeffs_) u *= c;
    return *this;
}

std::optional<Parity> VectorField::parity() const {
    std::optional<Parity> q;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto& u = coeffs_[k];
        if (u.is_zero()) continue;
        auto uq = u.parity();
        if (!uq) return std::nullopt;
        // Coefficient parity is field parity plus the slot derivation parity.
        Parity field_q = *uq + sig_->slot_parity(k);
        if (q && *q != field_q) return std::nullopt;
        q = field_q;
    }
    return q ? q : std::optional<Parity>(Parity::Even);
}

bool VectorField::is_parity_homogeneous(Parity q) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_parity_homogeneous(q + sig_->slot_parity(k))) return false;
    return true;
}

VectorField VectorField::parity_part(Parity q) const {
    VectorField out(sig_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out.coeffs_[k] = coeffs_[k].parity_part(q + sig_->slot_parity(k));
    return out;
}

VectorField VectorField::translate(const Point& p) const {
    VectorField out(sig_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k].translate(p);
    return out;
}

SuperPolynomial apply(const VectorField& x, const SuperPolynomial& f) {
    require_same_signature(x.signature(), f.signature());
    const auto& sig = *x.signature();
    SuperPolynomial out(x.signature());
    for (std::size_t k = 0; k < x.slot_count(); ++k) {
        const auto& u = x.coefficient(k);
        if (u.is_zero()) continue;
        SuperPolynomial df = k < sig.even_count
                                 ? f.partial(k + 1, VarKind::Even)
                                 : f.partial(k - sig.even_count + 1, VarKind::Odd);
        if (df.is_zero()) continue;
        out += SuperPolynomial::mul(u, df);
    }
    return out;
}

namespace {

VectorField homogeneous_bracket(const VectorField& x, Parity px, const VectorField& y, Parity py) {
    VectorField out(x.signature());
    bool negate = px == Parity::Odd && py == Parity::Odd;
    for (std::size_t k = 0; k < out.slot_count(); ++k) {
        SuperPolynomial c = apply(x, y.coefficient(k));
        SuperPolynomial d = apply(y, x.coefficient(k));
        if (negate)
            c += d;
        else
            c -= d;
        out.set_coefficient(k, std::move(c));
    }
    return out;
}

} // namespace

VectorField bracket(const VectorField& x, const VectorField& y) {
    require_same_signature(x.signature(), y.signature());
    VectorField out(x.signature());
    for (Parity px : {Parity::Even, Parity::Odd}) {
        VectorField xp = x.parity_part(px);
        if (xp.is_zero()) continue;
        for (Parity py : {Parity::Even, Parity::Odd}) {
            VectorField yp = y.parity_part(py);
            if (yp.is_zero()) continue;
            out += homogeneous_bracket(xp, px, yp, py);
        }
    }
    return out;
}

VectorField scale(const SuperPolynomial& f, const VectorField& x) {
    require_same_signature(f.signature(), x.signature());
    VectorField out(x.signature());
    for (std::size_t k = 0; k < x.slot_count(); ++k)
        out.set_coefficient(k, SuperPolynomial::mul(f, x.coefficient(k)));
    return out;
}

int filtration_degree(const VectorField& x) {
    if (x.is_zero()) throw ZeroInputError("the zero field has no filtration level");
    unsigned best = std::numeric_limits<unsigned>::max();
    for (std::size_t k = 0; k < x.slot_count(); ++k) {
        const auto& u = x.coefficient(k);
        if (u.is_zero()) continue;
        best = std::min(best, u.min_total_degree());
    }
    return static_cast<int>(best) - 1;
}

GradedField symbol(const VectorField& x) {
    int d = filtration_degree(x);
    VectorField lead(x.signature());
    for (std::size_t k = 0; k < x.slot_count(); ++k) {
        const auto& u = x.coefficient(k);
        if (u.is_zero()) continue;
        lead.set_coefficient(k, u.degree_part(static_cast<unsigned>(d + 1)));
    }
    return GradedField{std::move(lead), d};
}

std::optional<GradedField> graded_bracket(const GradedField& a, const GradedField& b) {
    VectorField c = bracket(a.field, b.field);
    if (c.is_zero()) return std::nullopt;
    return GradedField{std::move(c), a.level + b.level};
}

} // namespace svf

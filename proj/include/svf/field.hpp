#pragma once

#include <optional>
#include <vector>

#include "svf/poly.hpp"

namespace svf {

/// Super derivation of the free algebra, written with coefficients on the
/// left of the basis derivations: slots 0..r-1 pair with the even partials,
/// slots r..r+s-1 with the odd ones. The zero field has all coefficients
/// zero. A field is parity-q homogeneous when every even-slot coefficient
/// has parity q and every odd-slot coefficient has parity q+1 (the odd
/// basis derivations are themselves odd).
class VectorField {
public:
    explicit VectorField(SigPtr sig)
        : sig_(std::move(sig)), coeffs_(sig_->slot_count(), SuperPolynomial(sig_)) {}

    static VectorField zero(SigPtr sig) { return VectorField(std::move(sig)); }

    /// Basis derivation for a flat slot (0-based over r+s).
    static VectorField coordinate(SigPtr sig, std::size_t slot);

    const SigPtr& signature() const { return sig_; }
    std::size_t slot_count() const { return coeffs_.size(); }
    const SuperPolynomial& coefficient(std::size_t slot) const { return coeffs_.at(slot); }
    void set_coefficient(std::size_t slot, SuperPolynomial coeff);

    bool is_zero() const;
    bool operator==(const VectorField& other) const {
        return same_signature(sig_, other.sig_) && coeffs_ == other.coeffs_;
    }

    VectorField& operator+=(const VectorField& other);
    VectorField& operator-=(const VectorField& other);
    VectorField operator-() const;
    VectorField& operator*=(const Rational& c);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Rational& c, VectorField x) { return x *= c; }

    /// Parity of the field as a derivation, when homogeneous; nullopt for a
    /// genuinely mixed field. Zero is reported as Even.
    std::optional<Parity> parity() const;
    bool is_parity_homogeneous(Parity q) const;
    /// Homogeneous component of the given parity.
    VectorField parity_part(Parity q) const;

    /// Recenters every coefficient at p.
    VectorField translate(const Point& p) const;

private:
    SigPtr sig_;
    std::vector<SuperPolynomial> coeffs_;
};

/// Derivation action: sum over slots of coefficient * partial.
SuperPolynomial apply(const VectorField& x, const SuperPolynomial& f);

/// Lie superbracket. On homogeneous fields the k-th coefficient is
/// apply(X, Y_k) - (-1)^{|X||Y|} apply(Y, X_k); mixed inputs are decomposed
/// into homogeneous parts and recombined bilinearly.
VectorField bracket(const VectorField& x, const VectorField& y);

/// Left multiplication by an algebra element: coefficients f * u_k.
VectorField scale(const SuperPolynomial& f, const VectorField& x);

/// Filtration level at the origin: (minimal total degree over all nonzero
/// coefficients) - 1. Rejects the zero field. Callers recenter via
/// VectorField::translate for other points.
int filtration_degree(const VectorField& x);

/// Field whose nonzero coefficients are all homogeneous of degree level+1.
struct GradedField {
    VectorField field;
    int level;
};

/// Leading graded part: keeps in each coefficient exactly the homogeneous
/// part of degree filtration_degree(x) + 1. Not linear, but compatible with
/// brackets whenever the graded bracket is nonzero.
GradedField symbol(const VectorField& x);

/// Bracket of graded parts; nullopt when it vanishes (in which case nothing
/// is asserted about the symbol of the bracket).
std::optional<GradedField> graded_bracket(const GradedField& a, const GradedField& b);

} // namespace svf

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svf/certificate.hpp"
#include "svf/field.hpp"

namespace svf {

/// A vector field together with a bracket-expression certificate showing how
/// it is reached from a seed field inside the Lie ideal the seed generates.
/// `trace` records which construction produced each layer; entries start with
/// a stable label ("prop-lower", "lemma-L2", "j-derivative", ...) optionally
/// followed by detail text.
struct CertifiedField {
    VectorField seed;
    VectorField target;
    NodePtr cert;
    std::vector<std::string> trace;
    std::optional<Parity> parity; // parity of target when homogeneous
};

/// A reusable recipe: for a fixed algebra element e (parity-homogeneous, may
/// be zero or a scalar), `build(tau)` returns a certificate over `seed` whose
/// value is e*tau, for any field tau. Builders are pure and may be called
/// repeatedly; they prune branches that evaluate to zero.
struct JRecipe {
    VectorField seed;
    SuperPolynomial element;
    std::function<NodePtr(const VectorField&)> build;
    std::vector<std::string> provenance;
};

/// Reduce a nonzero field to a single constant-coefficient coordinate field
/// c*d(x_a) by an explicit ad-chain, recentred at p. Returns the certified
/// field and the slot index a; the value of the result on coordinate a at p
/// is nonzero, and the result is parity-homogeneous of the slot's parity.
std::pair<CertifiedField, std::size_t> lower_to_point(const VectorField& eta,
                                                      const Point& p);

/// From mu with mu(y)(p) != 0, produce nu = [(y - y(p)) d(z), mu], which
/// satisfies nu(z)(p) != 0. Parity of nu is |y| + |z| + |mu|.
CertifiedField separate_coordinate(const CertifiedField& mu, std::size_t y_slot,
                                   std::size_t z_slot, const Point& p);

/// For an even mu with mu(t_i)(p) != 0 pick a second-order witness g: t_i if
/// mu(mu(t_i))(p) != 0, else (t_i - p_i)^2 (whose second application yields
/// 2*(mu(t_i)(p))^2 at p). i is the 1-based even-variable index.
SuperPolynomial second_order_witness(const CertifiedField& mu, std::size_t i,
                                     const Point& p);

/// mu even: certify mu(f)*mu  ( = [mu, f*mu] up to sign ).
CertifiedField cert_L1(const CertifiedField& mu, const SuperPolynomial& f);

/// mu even, g even: certify mu(f)*mu(g)*mu.
CertifiedField cert_L2(const CertifiedField& mu, const SuperPolynomial& f,
                       const SuperPolynomial& g);

/// mu even, g even: certify f*mu(mu(g))*mu.
CertifiedField cert_L3(const CertifiedField& mu, const SuperPolynomial& f,
                       const SuperPolynomial& g);

/// mu even, f and g even, b and tau parity-homogeneous: certify
/// b*mu(f)*mu(mu(g))*tau. The certified output is verified exactly before it
/// is returned.
CertifiedField principal_multiple_cert(const CertifiedField& mu,
                                       const SuperPolynomial& f,
                                       const SuperPolynomial& g,
                                       const SuperPolynomial& b,
                                       const VectorField& tau);

/// Recipe form of the above with tau left free; handles non-homogeneous tau
/// by splitting into parity parts. element = b*mu(f)*mu(mu(g)).
JRecipe principal_recipe(const CertifiedField& mu, const SuperPolynomial& f,
                         const SuperPolynomial& g, const SuperPolynomial& b);

/// From a recipe for e and a homogeneous field X, a recipe for X(e), via
/// X(e)*tau = [X, e*tau] - (-1)^{|X||e|} e*[X, tau].
JRecipe j_derivative_step(const JRecipe& a, const VectorField& x);

/// From a recipe for e and a homogeneous b, a recipe for b*e.
JRecipe j_product_step(const JRecipe& a, const SuperPolynomial& b);

/// From a recipe whose element has a nonzero scalar evaluation at the origin,
/// derive a recipe for the constant 1 by repeated mixed partials: each round
/// differentiates away the minimal positive-degree monomial, which lands a
/// fresh nonzero scalar and strictly lowers the degree.
JRecipe unit_certificate(JRecipe rec);

/// Full pipeline: certificate over seed eta whose value is nu. Requires at
/// least one even variable and nonzero eta. The result is verified exactly;
/// failure to verify is an internal error, never a returned value.
CertifiedField simplicity_certificate(const VectorField& eta,
                                      const VectorField& nu);

/// r+s certified fields spanning the tangent directions at p: the matrix of
/// their coefficient values at p is checked exactly to be invertible.
std::vector<CertifiedField> tangent_basis_certificates(const VectorField& eta,
                                                       const Point& p);

/// Throw InternalVerificationError unless cert evaluates to target over seed.
void must_verify(const NodePtr& cert, const VectorField& seed,
                 const VectorField& target, const std::string& context);

} // namespace svf

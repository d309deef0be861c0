#include "svf/certify.hpp"

#include <string>
#include <utility>
#include <vector>

#include "svf/errors.hpp"
#include "svf/linalg.hpp"
#include "svf/print.hpp"

namespace svf {

namespace {

NodePtr zero_node() { return make_lincomb({}); }

void require_even(const VectorField& x, const char* what) {
    if (!x.is_parity_homogeneous(Parity::Even))
        throw ParityError(std::string(what) + " must be an even field");
}

void require_even(const SuperPolynomial& f, const char* what) {
    if (!f.is_parity_homogeneous(Parity::Even))
        throw ParityError(std::string(what) + " must be an even polynomial");
}

/// Materialize the recipe at every coordinate field and check the results
/// exactly. Coordinate fields bracket to zero against the chain fields, so
/// these samples stay small even when a full materialization would not.
void verify_recipe_samples(const JRecipe& rec) {
    const SigPtr& sig = rec.seed.signature();
    for (std::size_t k = 0; k < sig->slot_count(); ++k) {
        VectorField tau = VectorField::coordinate(sig, k);
        must_verify(rec.build(tau), rec.seed, scale(rec.element, tau),
                    "recipe sample at d(" + sig->slot_name(k) + ")");
    }
}

/// Shared core of the principal-multiple construction: appends the terms
/// certifying b*mu(f)*mu(mu(g))*tau for one parity-homogeneous tau.
void principal_terms(const CertifiedField& mu, const SuperPolynomial& f,
                     const SuperPolynomial& g, const SuperPolynomial& b,
                     const CertifiedField& l3_b, const CertifiedField& l3_fb,
                     const VectorField& tau, std::vector<LinTerm>& out) {
    Parity pb = b.parity().value();
    Parity pt = tau.parity().value();
    Rational eps =
        (pb == Parity::Odd && pt == Parity::Odd) ? Rational(-1) : Rational(1);
    out.push_back({-eps, make_ad(scale(f, tau), l3_b.cert)});
    out.push_back({eps, make_ad(tau, l3_fb.cert)});
    SuperPolynomial tfb = apply(tau, f) * b;
    if (!tfb.is_zero()) out.push_back({-eps, cert_L3(mu, tfb, g).cert});
}

} // namespace

void must_verify(const NodePtr& cert, const VectorField& seed,
                 const VectorField& target, const std::string& context) {
    VerifyResult res = verify_certificate(cert, seed, target);
    if (!res.ok())
        throw InternalVerificationError(context + ": certificate check failed (" +
                                        res.message + " at " + res.node_path + ")");
}

std::pair<CertifiedField, std::size_t> lower_to_point(const VectorField& eta,
                                                      const Point& p) {
    if (eta.is_zero()) throw ZeroInputError("cannot lower the zero field");
    const SigPtr& sig = eta.signature();
    require_point_matches(p, *sig);

    // Written around p, the field's graded-lex-largest coefficient monomial M
    // is the only one the mixed partial d^M does not annihilate, so the
    // ad-chain along M leaves a constant-coefficient field.
    VectorField recentred = eta.translate(p);
    MonomialOrder less;
    const std::size_t n = sig->slot_count();
    const Monomial* best = nullptr;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [mono, coeff] : recentred.coefficient(k).terms())
            if (best == nullptr || less(*best, mono)) best = &mono;
    Monomial chain_mono = *best;

    NodePtr node = make_generator();
    VectorField value = eta;
    unsigned depth = 0;
    auto step = [&](std::size_t slot) {
        VectorField d = VectorField::coordinate(sig, slot);
        node = make_ad(d, node);
        value = bracket(d, value);
        ++depth;
    };
    for (std::size_t i = 0; i < sig->even_count; ++i)
        for (unsigned rep = 0; rep < chain_mono.even_exponents[i]; ++rep) step(i);
    for (unsigned j : chain_mono.odd_indices()) step(sig->even_count + j - 1);

    if (value.is_zero())
        throw InternalVerificationError("lowering chain annihilated the field");
    std::size_t live = 0, slot = n;
    for (std::size_t k = 0; k < n; ++k) {
        const SuperPolynomial& c = value.coefficient(k);
        if (c.is_zero()) continue;
        if (c.max_total_degree() != 0)
            throw InternalVerificationError(
                "lowering chain left a non-constant coefficient");
        ++live;
        if (slot == n) slot = k;
    }

    // More than one surviving slot: one Euler-type bracket [x~ d(x), -]
    // extracts the chosen slot and kills the rest.
    if (live > 1) {
        SuperPolynomial coord = SuperPolynomial::coordinate(sig, slot);
        if (slot < sig->even_count)
            coord -= SuperPolynomial::constant(sig, p.even_coords[slot]);
        VectorField euler = scale(coord, VectorField::coordinate(sig, slot));
        node = make_ad(euler, node);
        value = bracket(euler, value);
    }

    SuperPolynomial y = SuperPolynomial::coordinate(sig, slot);
    if (apply(value, y).evaluate(p) == 0)
        throw InternalVerificationError("lowered field lost its value at the point");

    CertifiedField out{eta, value, node, {}, sig->slot_parity(slot)};
    out.trace.push_back("prop-lower slot=" + sig->slot_name(slot) +
                        " depth=" + std::to_string(depth) +
                        (live > 1 ? " split" : ""));
    must_verify(out.cert, out.seed, out.target, "lower_to_point");
    return {std::move(out), slot};
}

CertifiedField separate_coordinate(const CertifiedField& mu, std::size_t y_slot,
                                   std::size_t z_slot, const Point& p) {
    const SigPtr& sig = mu.target.signature();
    require_point_matches(p, *sig);
    if (y_slot >= sig->slot_count() || z_slot >= sig->slot_count())
        throw IndexError("coordinate slot out of range");

    SuperPolynomial y = SuperPolynomial::coordinate(sig, y_slot);
    if (apply(mu.target, y).evaluate(p) == 0)
        throw PreconditionError(
            "separation requires a field moving the chosen coordinate at the point");

    SuperPolynomial recentred_y = y;
    if (y_slot < sig->even_count)
        recentred_y -= SuperPolynomial::constant(sig, p.even_coords[y_slot]);
    VectorField left = scale(recentred_y, VectorField::coordinate(sig, z_slot));

    CertifiedField out{mu.seed, bracket(left, mu.target), make_ad(left, mu.cert),
                       mu.trace, std::nullopt};
    if (mu.parity)
        out.parity =
            *mu.parity + sig->slot_parity(y_slot) + sig->slot_parity(z_slot);
    out.trace.push_back("prop-separate y=" + sig->slot_name(y_slot) +
                        " z=" + sig->slot_name(z_slot));

    SuperPolynomial z = SuperPolynomial::coordinate(sig, z_slot);
    if (apply(out.target, z).evaluate(p) == 0)
        throw InternalVerificationError(
            "separated field lost its value on the target coordinate");
    must_verify(out.cert, out.seed, out.target, "separate_coordinate");
    return out;
}

SuperPolynomial second_order_witness(const CertifiedField& mu, std::size_t i,
                                     const Point& p) {
    const SigPtr& sig = mu.target.signature();
    require_point_matches(p, *sig);
    if (i < 1 || i > sig->even_count)
        throw IndexError("even-variable index out of range");
    require_even(mu.target, "witness base field");

    SuperPolynomial ti = SuperPolynomial::even_variable(sig, i);
    if (apply(mu.target, ti).evaluate(p) == 0)
        throw PreconditionError("field does not move the chosen coordinate at the point");
    if (apply(mu.target, apply(mu.target, ti)).evaluate(p) != 0) return ti;

    SuperPolynomial shifted =
        ti - SuperPolynomial::constant(sig, p.even_coords[i - 1]);
    SuperPolynomial g = shifted * shifted;
    if (apply(mu.target, apply(mu.target, g)).evaluate(p) == 0)
        throw InternalVerificationError("quadratic witness failed the second-order check");
    return g;
}

CertifiedField cert_L1(const CertifiedField& mu, const SuperPolynomial& f) {
    require_even(mu.target, "L1 base field");
    VectorField target = scale(apply(mu.target, f), mu.target);
    NodePtr node =
        make_lincomb({{Rational(-1), make_ad(scale(f, mu.target), mu.cert)}});
    CertifiedField out{mu.seed, target, node, mu.trace, target.parity()};
    out.trace.push_back("lemma-L1");
    must_verify(out.cert, out.seed, out.target, "cert_L1");
    return out;
}

CertifiedField cert_L2(const CertifiedField& mu, const SuperPolynomial& f,
                       const SuperPolynomial& g) {
    require_even(mu.target, "L2 base field");
    require_even(g, "L2 second argument");
    CertifiedField l1 = cert_L1(mu, g);
    SuperPolynomial mg = apply(mu.target, g);
    VectorField target = scale(apply(mu.target, f) * mg, mu.target);
    Rational neg_half = make_rational(-1, 2);
    std::vector<LinTerm> terms;
    terms.push_back({neg_half, make_ad(scale(f * mg, mu.target), mu.cert)});
    terms.push_back({neg_half, make_ad(scale(f, mu.target), l1.cert)});
    CertifiedField out{mu.seed, target, make_lincomb(std::move(terms)), mu.trace,
                       target.parity()};
    out.trace.push_back("lemma-L2");
    must_verify(out.cert, out.seed, out.target, "cert_L2");
    return out;
}

CertifiedField cert_L3(const CertifiedField& mu, const SuperPolynomial& f,
                       const SuperPolynomial& g) {
    require_even(mu.target, "L3 base field");
    require_even(g, "L3 second argument");
    CertifiedField l1 = cert_L1(mu, f * apply(mu.target, g));
    CertifiedField l2 = cert_L2(mu, f, g);
    VectorField target =
        scale(f * apply(mu.target, apply(mu.target, g)), mu.target);
    std::vector<LinTerm> terms;
    terms.push_back({Rational(1), l1.cert});
    terms.push_back({Rational(-1), l2.cert});
    CertifiedField out{mu.seed, target, make_lincomb(std::move(terms)), mu.trace,
                       target.parity()};
    out.trace.push_back("lemma-L3");
    must_verify(out.cert, out.seed, out.target, "cert_L3");
    return out;
}

CertifiedField principal_multiple_cert(const CertifiedField& mu,
                                       const SuperPolynomial& f,
                                       const SuperPolynomial& g,
                                       const SuperPolynomial& b,
                                       const VectorField& tau) {
    require_even(mu.target, "principal base field");
    require_even(f, "principal first argument");
    require_even(g, "principal second argument");
    if (!b.parity()) throw ParityError("principal multiplier must be parity-homogeneous");
    if (!tau.parity()) throw ParityError("principal target factor must be parity-homogeneous");

    VectorField target =
        scale(b * apply(mu.target, f) * apply(mu.target, apply(mu.target, g)), tau);
    NodePtr node;
    if (b.is_zero() || tau.is_zero()) {
        node = zero_node();
    } else {
        CertifiedField l3_b = cert_L3(mu, b, g);
        CertifiedField l3_fb = cert_L3(mu, f * b, g);
        std::vector<LinTerm> terms;
        principal_terms(mu, f, g, b, l3_b, l3_fb, tau, terms);
        node = make_lincomb(std::move(terms));
    }
    CertifiedField out{mu.seed, target, node, mu.trace, target.parity()};
    out.trace.push_back("lemma-principal");
    must_verify(out.cert, out.seed, out.target, "principal_multiple_cert");
    return out;
}

JRecipe principal_recipe(const CertifiedField& mu, const SuperPolynomial& f,
                         const SuperPolynomial& g, const SuperPolynomial& b) {
    require_even(mu.target, "principal base field");
    require_even(f, "principal first argument");
    require_even(g, "principal second argument");
    if (!b.parity()) throw ParityError("principal multiplier must be parity-homogeneous");

    SuperPolynomial element =
        b * apply(mu.target, f) * apply(mu.target, apply(mu.target, g));
    std::function<NodePtr(const VectorField&)> build;
    if (b.is_zero()) {
        build = [](const VectorField&) { return zero_node(); };
    } else {
        auto base = std::make_shared<CertifiedField>(mu);
        auto l3_b = std::make_shared<CertifiedField>(cert_L3(mu, b, g));
        auto l3_fb = std::make_shared<CertifiedField>(cert_L3(mu, f * b, g));
        SuperPolynomial fc = f, gc = g, bc = b;
        build = [base, l3_b, l3_fb, fc, gc, bc](const VectorField& tau) -> NodePtr {
            if (tau.is_zero()) return zero_node();
            std::vector<LinTerm> terms;
            for (Parity q : {Parity::Even, Parity::Odd}) {
                VectorField part = tau.parity_part(q);
                if (part.is_zero()) continue;
                principal_terms(*base, fc, gc, bc, *l3_b, *l3_fb, part, terms);
            }
            return make_lincomb(std::move(terms));
        };
    }
    JRecipe rec{mu.seed, std::move(element), std::move(build), {"lemma-principal"}};
    if (!b.is_zero()) verify_recipe_samples(rec);
    return rec;
}

JRecipe j_derivative_step(const JRecipe& a, const VectorField& x) {
    std::optional<Parity> px = x.parity();
    if (!px) throw ParityError("derivative step needs a parity-homogeneous field");
    std::optional<Parity> pe = a.element.parity();
    if (!pe) throw ParityError("derivative step needs a parity-homogeneous element");
    bool both_odd = *px == Parity::Odd && *pe == Parity::Odd;
    Rational tail_coeff = both_odd ? Rational(1) : Rational(-1);

    auto inner = a.build;
    VectorField xc = x;
    auto build = [inner, xc, tail_coeff](const VectorField& tau) -> NodePtr {
        if (tau.is_zero()) return zero_node();
        std::vector<LinTerm> terms;
        terms.push_back({Rational(1), make_ad(xc, inner(tau))});
        VectorField xt = bracket(xc, tau);
        if (!xt.is_zero()) terms.push_back({tail_coeff, inner(xt)});
        return make_lincomb(std::move(terms));
    };
    JRecipe out{a.seed, apply(x, a.element), std::move(build), a.provenance};
    out.provenance.push_back("j-derivative x=" + print_field(x));
    verify_recipe_samples(out);
    return out;
}

JRecipe j_product_step(const JRecipe& a, const SuperPolynomial& b) {
    std::optional<Parity> pb = b.parity();
    if (!pb) throw ParityError("product step needs a parity-homogeneous multiplier");
    std::optional<Parity> pe = a.element.parity();
    if (!pe) throw ParityError("product step needs a parity-homogeneous element");
    bool both_odd = *pb == Parity::Odd && *pe == Parity::Odd;

    auto inner = a.build;
    SuperPolynomial signed_b = both_odd ? -b : b;
    auto build = [inner, signed_b](const VectorField& tau) -> NodePtr {
        if (tau.is_zero()) return zero_node();
        VectorField scaled = scale(signed_b, tau);
        if (scaled.is_zero()) return zero_node();
        return inner(scaled);
    };
    JRecipe out{a.seed, b * a.element, std::move(build), a.provenance};
    out.provenance.push_back("j-product b=" + print_poly(b));
    verify_recipe_samples(out);
    return out;
}

JRecipe unit_certificate(JRecipe rec) {
    if (rec.element.is_zero())
        throw ZeroInputError("unit construction needs a nonzero element");
    if (!rec.element.parity())
        throw ParityError("unit construction needs a parity-homogeneous element");
    const SigPtr& sig = rec.seed.signature();
    const unsigned budget = rec.element.max_total_degree();
    unsigned rounds = 0;

    while (rec.element.max_total_degree() > 0) {
        unsigned before = rec.element.max_total_degree();
        // The minimal positive-degree monomial: its full mixed partial lands
        // a fresh nonzero scalar (every other monomial of its degree dies)
        // and strictly lowers the maximal degree.
        const Monomial* mono = nullptr;
        for (const auto& [m, c] : rec.element.terms())
            if (m.total_degree() >= 1) {
                mono = &m;
                break;
            }
        Monomial m = *mono;
        for (std::size_t i = 0; i < sig->even_count; ++i)
            for (unsigned rep = 0; rep < m.even_exponents[i]; ++rep)
                rec = j_derivative_step(rec, VectorField::coordinate(sig, i));
        for (unsigned j : m.odd_indices())
            rec = j_derivative_step(rec,
                                    VectorField::coordinate(sig, sig->even_count + j - 1));

        if (rec.element.is_zero() || rec.element.constant_term() == 0)
            throw InternalVerificationError("unit loop lost its scalar term");
        if (rec.element.max_total_degree() >= before)
            throw InternalVerificationError("unit loop failed to lower the degree");
        if (++rounds > budget)
            throw InternalVerificationError("unit loop exceeded its round budget");
    }

    Rational c = rec.element.constant_term();
    Rational inv = Rational(1) / c;
    auto inner = rec.build;
    auto build = [inner, inv](const VectorField& tau) -> NodePtr {
        if (tau.is_zero()) return zero_node();
        return inner(inv * tau);
    };
    JRecipe out{rec.seed, SuperPolynomial::constant(sig, Rational(1)),
                std::move(build), rec.provenance};
    out.provenance.push_back("unit scale=" + rational_to_string(inv));
    verify_recipe_samples(out);
    return out;
}

CertifiedField simplicity_certificate(const VectorField& eta,
                                      const VectorField& nu) {
    require_same_signature(eta.signature(), nu.signature());
    const SigPtr& sig = eta.signature();
    if (sig->even_count == 0)
        throw PreconditionError(
            "signature has no even variables; the derivation algebra is "
            "finite-dimensional there, use the scan oracle instead");
    if (eta.is_zero()) throw ZeroInputError("seed field is zero");

    Point p = Point::origin(sig->even_count);
    auto [mu, y_slot] = lower_to_point(eta, p);
    CertifiedField sep = separate_coordinate(mu, y_slot, 0, p);
    if (!sep.target.is_parity_homogeneous(Parity::Even))
        throw InternalVerificationError("separated field is not even");

    SuperPolynomial f = SuperPolynomial::even_variable(sig, 1);
    SuperPolynomial g = second_order_witness(sep, 1, p);
    JRecipe base =
        principal_recipe(sep, f, g, SuperPolynomial::constant(sig, Rational(1)));
    if (base.element.is_zero() || base.element.constant_term() == 0)
        throw InternalVerificationError("principal element has no scalar at the origin");
    JRecipe unit = unit_certificate(std::move(base));

    CertifiedField out{eta, nu, unit.build(nu), sep.trace, nu.parity()};
    out.trace.push_back("prop-second-order witness=" + print_poly(g));
    for (const auto& label : unit.provenance) out.trace.push_back(label);
    out.trace.push_back("final");
    must_verify(out.cert, out.seed, out.target, "simplicity_certificate");
    return out;
}

std::vector<CertifiedField> tangent_basis_certificates(const VectorField& eta,
                                                       const Point& p) {
    const SigPtr& sig = eta.signature();
    require_point_matches(p, *sig);
    if (eta.is_zero()) throw ZeroInputError("seed field is zero");

    auto [mu, y_slot] = lower_to_point(eta, p);
    const std::size_t n = sig->slot_count();
    std::vector<CertifiedField> out;
    Mat values(n, Row(n, Rational(0)));
    for (std::size_t z = 0; z < n; ++z) {
        CertifiedField nu = separate_coordinate(mu, y_slot, z, p);
        for (std::size_t k = 0; k < n; ++k)
            values[z][k] = nu.target.coefficient(k).evaluate(p);
        out.push_back(std::move(nu));
    }
    if (determinant(values) == 0)
        throw InternalVerificationError("tangent value matrix is singular");
    return out;
}

} // namespace svf

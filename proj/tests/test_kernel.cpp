#include <doctest.h>

#include <svf/errors.hpp>
#include <svf/poly.hpp>

#include "testgen.hpp"

using namespace svf;

namespace {

SigPtr sig11() { return make_signature(1, 1); }
SigPtr sig12() { return make_signature(1, 2); }
SigPtr sig22() { return make_signature(2, 2); }

SuperPolynomial C(const SigPtr& s, long num, long den = 1) {
    return SuperPolynomial::constant(s, make_rational(num, den));
}

int koszul(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

SuperPolynomial signed_copy(const SuperPolynomial& p, int sign) {
    return sign < 0 ? -p : p;
}

} // namespace

TEST_SUITE("kernel.mul") {
    TEST_CASE("odd transposition sign") {
        auto s = sig12();
        auto th1 = SuperPolynomial::odd_variable(s, 1);
        auto th2 = SuperPolynomial::odd_variable(s, 2);
        auto prod = th1 * th2;
        CHECK(prod == -(th2 * th1));
        CHECK(prod.term_count() == 1);
        CHECK(prod.terms().begin()->first.odd_mask == 0b11u);
        CHECK(prod.terms().begin()->second == Rational(1));
    }

    TEST_CASE("odd square vanishes") {
        auto s = sig12();
        auto th1 = SuperPolynomial::odd_variable(s, 1);
        CHECK((th1 * th1).is_zero());
    }

    TEST_CASE("difference of conjugates") {
        // (t + theta1 theta2)(t - theta1 theta2) = t^2: the cross terms cancel
        // and (theta1 theta2)^2 = 0.
        auto s = sig12();
        auto t = SuperPolynomial::even_variable(s, 1);
        auto w = SuperPolynomial::odd_variable(s, 1) * SuperPolynomial::odd_variable(s, 2);
        CHECK((t + w) * (t - w) == t * t);
    }

    TEST_CASE("signature mismatch rejected") {
        auto a = SuperPolynomial::even_variable(sig11(), 1);
        auto b = SuperPolynomial::even_variable(sig12(), 1);
        CHECK_THROWS_AS(SuperPolynomial::mul(a, b), SignatureMismatchError);
    }
}

TEST_SUITE("kernel.partial") {
    TEST_CASE("even power rule") {
        auto s = sig11();
        auto t = SuperPolynomial::even_variable(s, 1);
        auto t3 = t * t * t;
        CHECK(t3.partial(1, VarKind::Even) == Rational(3) * (t * t));
    }

    TEST_CASE("left derivative sign at position 2") {
        auto s = sig12();
        auto th1 = SuperPolynomial::odd_variable(s, 1);
        auto th2 = SuperPolynomial::odd_variable(s, 2);
        auto m = th1 * th2;
        CHECK(m.partial(2, VarKind::Odd) == -th1);
        CHECK(m.partial(1, VarKind::Odd) == th2);
    }

    TEST_CASE("absent variable gives zero") {
        auto s = sig12();
        auto th1 = SuperPolynomial::odd_variable(s, 1);
        CHECK(th1.partial(2, VarKind::Odd).is_zero());
        CHECK(th1.partial(1, VarKind::Even).is_zero());
    }

    TEST_CASE("index out of range") {
        auto s = sig11();
        auto t = SuperPolynomial::even_variable(s, 1);
        CHECK_THROWS_AS(t.partial(2, VarKind::Even), IndexError);
        CHECK_THROWS_AS(t.partial(0, VarKind::Odd), IndexError);
    }
}

TEST_SUITE("kernel.evaluate") {
    TEST_CASE("even substitution") {
        auto s = sig11();
        auto t = SuperPolynomial::even_variable(s, 1);
        auto f = t * t + C(s, 3);
        Point p;
        p.even_coords = {Rational(2)};
        CHECK(f.evaluate(p) == Rational(7));
    }

    TEST_CASE("odd part dies at closed points") {
        auto s = sig12();
        auto f = SuperPolynomial::odd_variable(s, 1) * SuperPolynomial::odd_variable(s, 2)
                 + Rational(5) * SuperPolynomial::even_variable(s, 1);
        Point p;
        p.even_coords = {Rational(1)};
        CHECK(f.evaluate(p) == Rational(5));
    }

    TEST_CASE("two even variables") {
        auto s = sig22();
        auto f = SuperPolynomial::even_variable(s, 1) * SuperPolynomial::even_variable(s, 2)
                 - SuperPolynomial::odd_variable(s, 1) * SuperPolynomial::odd_variable(s, 2);
        Point p;
        p.even_coords = {Rational(1), Rational(-1)};
        CHECK(f.evaluate(p) == Rational(-1));
    }
}

TEST_SUITE("kernel.translate") {
    TEST_CASE("binomial expansion") {
        auto s = sig11();
        auto t = SuperPolynomial::even_variable(s, 1);
        Point p;
        p.even_coords = {Rational(1)};
        CHECK((t * t).translate(p) == t * t + Rational(2) * t + C(s, 1));
    }

    TEST_CASE("odd variables unaffected") {
        auto s = sig11();
        auto th = SuperPolynomial::odd_variable(s, 1);
        Point p;
        p.even_coords = {make_rational(7, 3)};
        CHECK(th.translate(p) == th);
    }

    TEST_CASE("two-variable cross term") {
        auto s = sig22();
        auto t1 = SuperPolynomial::even_variable(s, 1);
        auto t2 = SuperPolynomial::even_variable(s, 2);
        Point p;
        p.even_coords = {Rational(1), Rational(2)};
        CHECK((t1 * t2).translate(p)
              == t1 * t2 + Rational(2) * t1 + t2 + C(s, 2));
    }
}

TEST_SUITE("kernel.min_degree_part") {
    TEST_CASE("examples") {
        auto s = sig12();
        auto t = SuperPolynomial::even_variable(s, 1);
        auto th1 = SuperPolynomial::odd_variable(s, 1);
        auto th2 = SuperPolynomial::odd_variable(s, 2);

        auto f = t * t + t * t * t * t;
        CHECK(f.min_degree_part() == t * t);

        auto g = th1 + t * th2;
        CHECK(g.min_degree_part() == th1);

        auto h = C(s, 3) + t + th1 * th2;
        CHECK(h.min_degree_part() == C(s, 3));
    }

    TEST_CASE("zero polynomial has no degree") {
        auto z = SuperPolynomial::zero(sig11());
        CHECK_THROWS_AS(z.min_degree_part(), ZeroInputError);
        CHECK_THROWS_AS(z.min_total_degree(), ZeroInputError);
        CHECK_THROWS_AS(z.max_total_degree(), ZeroInputError);
    }
}

TEST_SUITE("kernel.properties") {
    TEST_CASE("supercommutativity on homogeneous pairs") {
        Rng rng(0x5c01);
        for (int trial = 0; trial < 200; ++trial) {
            auto s = make_signature(1 + rng.below(3), 1 + rng.below(3));
            Parity pa = rng.coin() ? Parity::Odd : Parity::Even;
            Parity pb = rng.coin() ? Parity::Odd : Parity::Even;
            auto f = testgen::random_homogeneous_poly(rng, s, pa, 4);
            auto g = testgen::random_homogeneous_poly(rng, s, pb, 4);
            CHECK(f * g == signed_copy(g * f, koszul(pa, pb)));
        }
    }

    TEST_CASE("associativity and distributivity") {
        Rng rng(0xa550);
        for (int trial = 0; trial < 200; ++trial) {
            auto s = make_signature(1 + rng.below(3), 1 + rng.below(3));
            auto f = testgen::random_poly(rng, s, 4);
            auto g = testgen::random_poly(rng, s, 4);
            auto h = testgen::random_poly(rng, s, 4);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
        }
    }

    TEST_CASE("odd monomials square to zero") {
        Rng rng(0x0dd5);
        for (int trial = 0; trial < 100; ++trial) {
            auto s = make_signature(1 + rng.below(2), 1 + rng.below(3));
            SuperPolynomial f = SuperPolynomial::zero(s);
            for (;;) {
                Monomial m = testgen::random_monomial(rng, *s, 4);
                if (m.parity() != Parity::Odd) continue;
                f.add_term(m, testgen::random_nonzero_rational(rng));
                break;
            }
            CHECK((f * f).is_zero());
        }
    }

    TEST_CASE("Leibniz rule for partials") {
        Rng rng(0x1e1b);
        for (int trial = 0; trial < 200; ++trial) {
            auto s = make_signature(2, 2);
            Parity pf = rng.coin() ? Parity::Odd : Parity::Even;
            auto f = testgen::random_homogeneous_poly(rng, s, pf, 3);
            auto g = testgen::random_poly(rng, s, 3);
            // Even directions commute with everything.
            std::size_t i = 1 + rng.below(2);
            CHECK((f * g).partial(i, VarKind::Even)
                  == f.partial(i, VarKind::Even) * g + f * g.partial(i, VarKind::Even));
            // Odd directions pick up the Koszul sign against |f|.
            std::size_t j = 1 + rng.below(2);
            auto lhs = (f * g).partial(j, VarKind::Odd);
            auto rhs = f.partial(j, VarKind::Odd) * g
                       + signed_copy(f * g.partial(j, VarKind::Odd),
                                     koszul(Parity::Odd, pf));
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("partial commutation relations") {
        Rng rng(0xc033);
        auto s = make_signature(2, 3);
        for (int trial = 0; trial < 100; ++trial) {
            auto f = testgen::random_poly(rng, s, 4);
            // odd-odd same index: square zero
            for (std::size_t j = 1; j <= 3; ++j)
                CHECK(f.partial(j, VarKind::Odd).partial(j, VarKind::Odd).is_zero());
            // even-even and even-odd commute
            CHECK(f.partial(1, VarKind::Even).partial(2, VarKind::Even)
                  == f.partial(2, VarKind::Even).partial(1, VarKind::Even));
            CHECK(f.partial(1, VarKind::Even).partial(2, VarKind::Odd)
                  == f.partial(2, VarKind::Odd).partial(1, VarKind::Even));
            // odd-odd distinct indices anticommute
            CHECK(f.partial(1, VarKind::Odd).partial(3, VarKind::Odd)
                  == -(f.partial(3, VarKind::Odd).partial(1, VarKind::Odd)));
        }
    }

    TEST_CASE("evaluate is a ring morphism") {
        Rng rng(0xe0a1);
        for (int trial = 0; trial < 100; ++trial) {
            auto s = make_signature(2, 2);
            auto f = testgen::random_poly(rng, s, 3);
            auto g = testgen::random_poly(rng, s, 3);
            Point p = testgen::random_point(rng, *s);
            CHECK((f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p));
            CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
        }
    }

    TEST_CASE("translate laws") {
        Rng rng(0x7a51);
        for (int trial = 0; trial < 100; ++trial) {
            auto s = make_signature(2, 2);
            auto f = testgen::random_poly(rng, s, 3);
            Point p = testgen::random_point(rng, *s);
            Point minus_p;
            for (const auto& c : p.even_coords) minus_p.even_coords.push_back(-c);
            CHECK(f.translate(p).evaluate(Point::origin(2)) == f.evaluate(p));
            CHECK(f.translate(p).translate(minus_p) == f);
            // Translation is a ring homomorphism too.
            auto g = testgen::random_poly(rng, s, 3);
            CHECK((f * g).translate(p) == f.translate(p) * g.translate(p));
        }
    }

    TEST_CASE("parity bookkeeping") {
        auto s = sig12();
        auto t = SuperPolynomial::even_variable(s, 1);
        auto th1 = SuperPolynomial::odd_variable(s, 1);
        auto mixed = t + th1;
        CHECK(t.parity() == Parity::Even);
        CHECK(th1.parity() == Parity::Odd);
        CHECK(!mixed.parity().has_value());
        CHECK(mixed.parity_part(Parity::Even) == t);
        CHECK(mixed.parity_part(Parity::Odd) == th1);
        CHECK(SuperPolynomial::zero(s).parity() == Parity::Even);
    }

    TEST_CASE("min_degree_part is homogeneous") {
        Rng rng(0x3d3d);
        for (int trial = 0; trial < 100; ++trial) {
            auto s = make_signature(2, 2);
            auto f = testgen::random_poly(rng, s, 4, 6);
            if (f.is_zero()) continue;
            auto lead = f.min_degree_part();
            unsigned d = f.min_total_degree();
            for (const auto& [m, c] : lead.terms()) CHECK(m.total_degree() == d);
            CHECK(lead == f.degree_part(d));
        }
    }
}

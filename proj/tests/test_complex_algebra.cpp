#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "necklace/complex_algebra.hpp"

using namespace necklace;

namespace {

Complex random_unit_disk(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        Complex z(u(rng), u(rng));
        if (std::abs(z) <= 1.0) return z;
    }
}

Polynomial random_poly(std::mt19937& rng, int degree) {
    std::vector<Complex> c(degree + 1);
    for (auto& x : c) x = random_unit_disk(rng);
    if (std::abs(c.back()) < 0.1) c.back() += Complex(0.5, 0.0);
    return Polynomial(c);
}

}  // namespace

TEST_CASE("polynomial basics") {
    Polynomial p({1.0, 2.0, 3.0});  // 1 + 2z + 3z^2
    CHECK(p.degree() == 2);
    CHECK(p(Complex(2.0)) == Complex(17.0));
    Polynomial d = p.derivative();
    CHECK(d.coefficients() == std::vector<Complex>{Complex(2.0), Complex(6.0)});

    auto [q, r] = (p * p).divmod(p);
    CHECK((q - p).is_zero());
    CHECK(r.is_zero());

    Polynomial s = p.taylor_shift(Complex(1.0, 0.5));
    for (Complex w : {Complex(0.3, 0.1), Complex(-1.2, 0.7)})
        CHECK(std::abs(s(w) - p(Complex(1.0, 0.5) + w)) < 1e-12);
}

TEST_CASE("poly_roots: z^2 + 1") {
    RootSet r = poly_roots(Polynomial({1.0, 0.0, 1.0}));
    REQUIRE(r.roots.size() == 2);
    // sorted by argument in [0, 2pi): i before -i
    CHECK(std::abs(r.roots[0].location - Complex(0.0, 1.0)) < 1e-12);
    CHECK(std::abs(r.roots[1].location - Complex(0.0, -1.0)) < 1e-12);
    CHECK(r.roots[0].multiplicity == 1);
}

TEST_CASE("poly_roots: central zero equation z^3 + 2") {
    // oracle: cube roots of -2
    RootSet r = poly_roots(Polynomial({2.0, 0.0, 0.0, 1.0}));
    REQUIRE(r.roots.size() == 3);
    double mod = std::pow(2.0, 1.0 / 3.0);
    std::vector<double> args = {std::numbers::pi / 3.0, std::numbers::pi,
                                5.0 * std::numbers::pi / 3.0};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(r.roots[i].location - std::polar(mod, args[i])) < 1e-10);
    }
}

TEST_CASE("poly_roots: double root with clustering") {
    // 4z^3 + 12tz^2 = 4z^2 (z + 3t), t = 0.01
    Polynomial p({0.0, 0.0, 0.12, 4.0});
    RootSet r = poly_roots(p, 1e-5);
    REQUIRE(r.roots.size() == 2);
    // sorted: root 0 has argument 0-ish... center of double root cluster near 0
    bool found_double = false, found_simple = false;
    for (const auto& e : r.roots) {
        if (e.multiplicity == 2) {
            found_double = true;
            CHECK(std::abs(e.location) < 1e-6);
        }
        if (e.multiplicity == 1) {
            found_simple = true;
            CHECK(std::abs(e.location - Complex(-0.03)) < 1e-10);
        }
    }
    CHECK(found_double);
    CHECK(found_simple);
}

TEST_CASE("poly_roots errors") {
    CHECK_THROWS_AS(poly_roots(Polynomial()), DegenerateInputError);
}

TEST_CASE("poly_roots reconstruction property, degree <= 12") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int deg = 1 + static_cast<int>(rng() % 12);
        Polynomial p = random_poly(rng, deg);
        RootSet r = poly_roots(p);
        CHECK(r.total_multiplicity() == deg);
        Polynomial rebuilt = Polynomial::from_roots(Complex(1.0), r.expanded());
        for (int k = 0; k <= deg; ++k) {
            Complex expected = p.coefficient(k) / p.leading();
            CHECK(std::abs(rebuilt.coefficient(k) - expected) < 1e-7);
        }
    }
}

TEST_CASE("rational_reduce basics") {
    // (z^2 - 1)/(z - 1) -> z + 1
    RationalFunction f = rational_reduce(Polynomial({-1.0, 0.0, 1.0}), Polynomial({-1.0, 1.0}));
    CHECK(f.denominator().degree() == 0);
    CHECK(std::abs(f(Complex(3.0, 1.0)) - Complex(4.0, 1.0)) < 1e-12);

    // z/z -> 1
    RationalFunction g = rational_reduce(Polynomial({0.0, 1.0}), Polynomial({0.0, 1.0}));
    CHECK(g.numerator().degree() == 0);
    CHECK(std::abs(g(Complex(0.7, -0.2)) - Complex(1.0)) < 1e-12);
}

TEST_CASE("rational_reduce: central g- for m=2 from partial fractions") {
    // -1/z + 1/(z+1) + 1/(z-1) ... with central values beta_i = 1/(m-1) = 1:
    RationalFunction f =
        RationalFunction(Polynomial({-1.0}), Polynomial({0.0, 1.0})) +
        RationalFunction(Polynomial({1.0}), Polynomial({1.0, 1.0})) +
        RationalFunction(Polynomial({1.0}), Polynomial({-1.0, 1.0}));
    // oracle: (z^2+1)/(z(z^2-1))
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
        Complex z = 3.0 * random_unit_disk(rng) + Complex(0.1, 2.0);
        Complex expect = (z * z + 1.0) / (z * (z * z - 1.0));
        CHECK(std::abs(f(z) - expect) < 1e-9 * std::abs(expect));
    }
}

TEST_CASE("partial_fractions examples") {
    // (z^2+1)/(z(z^2-1)): poles 0:-1; 1:+1; -1:+1
    RationalFunction f(Polynomial({1.0, 0.0, 1.0}), Polynomial({0.0, -1.0, 0.0, 1.0}));
    PartialFractions pf = partial_fractions(f);
    REQUIRE(pf.poles.size() == 3);
    CHECK(pf.polynomial_part.is_zero());
    for (const auto& p : pf.poles) {
        CHECK(p.order == 1);
        if (std::abs(p.pole) < 1e-10) CHECK(std::abs(p.coefficients[0] + 1.0) < 1e-10);
        if (std::abs(p.pole - Complex(1.0)) < 1e-10)
            CHECK(std::abs(p.coefficients[0] - 1.0) < 1e-10);
        if (std::abs(p.pole + Complex(1.0)) < 1e-10)
            CHECK(std::abs(p.coefficients[0] - 1.0) < 1e-10);
    }

    // 1/z^2 -> pole 0, order 2, coefficients (0, 1)
    RationalFunction g(Polynomial({1.0}), Polynomial({0.0, 0.0, 1.0}));
    PartialFractions pg = partial_fractions(g);
    REQUIRE(pg.poles.size() == 1);
    CHECK(pg.poles[0].order == 2);
    CHECK(std::abs(pg.poles[0].coefficients[0]) < 1e-12);
    CHECK(std::abs(pg.poles[0].coefficients[1] - 1.0) < 1e-12);
}

TEST_CASE("partial_fractions: central g+ for m=3") {
    // 3z^2/(2(z^3-1)): residue 1/2 at each cube root of 1
    RationalFunction f(Polynomial({0.0, 0.0, 3.0}), Polynomial({-2.0, 0.0, 0.0, 2.0}));
    PartialFractions pf = partial_fractions(f);
    REQUIRE(pf.poles.size() == 3);
    for (const auto& p : pf.poles) {
        CHECK(std::abs(std::abs(p.pole) - 1.0) < 1e-10);
        CHECK(std::abs(p.coefficients[0] - 0.5) < 1e-10);
    }
}

TEST_CASE("partial_fractions ambiguity error") {
    double d = 1e-9;
    Polynomial den = Polynomial::from_roots(Complex(1.0), {Complex(1.0), Complex(1.0 + d)});
    RationalFunction f(Polynomial({1.0}), den, false);
    CHECK_THROWS_AS(partial_fractions(f, 1e-10), IllConditionedInputError);
}

TEST_CASE("partial_fractions recompose identity (property)") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        int dn = 1 + static_cast<int>(rng() % 6);
        int dd = 1 + static_cast<int>(rng() % 6);
        RationalFunction f(random_poly(rng, dn), random_poly(rng, dd));
        PartialFractions pf = partial_fractions(f);
        for (int i = 0; i < 20; ++i) {
            Complex z = 4.0 * random_unit_disk(rng);
            Complex fv = f(z);
            double dist = 1e9;
            for (const auto& p : pf.poles) dist = std::min(dist, std::abs(z - p.pole));
            if (dist < 1e-2 || std::abs(fv) < 1e-12) continue;
            CHECK(std::abs(pf.evaluate(z) - fv) < 1e-9 * std::max(1.0, std::abs(fv)));
        }
    }
}

TEST_CASE("derivative product rule (property)") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        RationalFunction f(random_poly(rng, 3), random_poly(rng, 3));
        RationalFunction g(random_poly(rng, 2), random_poly(rng, 3));
        RationalFunction lhs = (f * g).derivative();
        RationalFunction rhs = f.derivative() * g + f * g.derivative();
        for (int i = 0; i < 10; ++i) {
            Complex z = 3.0 * random_unit_disk(rng) + Complex(5.0, 5.0);
            Complex a = lhs(z), b = rhs(z);
            CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("laurent_coefficients at a simple and double pole") {
    // f = 1/(z-1) + 2 + 3(z-1): laurent at 1
    RationalFunction f =
        RationalFunction(Polynomial({1.0}), Polynomial({-1.0, 1.0})) +
        RationalFunction::constant(Complex(2.0)) +
        RationalFunction(Polynomial({-3.0, 3.0}), Polynomial({1.0}), false);
    auto c = laurent_coefficients(f, Complex(1.0), 1, 3);
    CHECK(std::abs(c[0] - 1.0) < 1e-12);
    CHECK(std::abs(c[1] - 2.0) < 1e-12);
    CHECK(std::abs(c[2] - 3.0) < 1e-12);
}

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "necklace/hurwitz.hpp"

using namespace necklace;

namespace {

Polynomial f_poly(double t) {
    // z^4 + 4 t z^3
    return Polynomial({Complex(0.0), Complex(0.0), Complex(0.0),
                       Complex(4.0 * t), Complex(1.0)});
}

Polynomial g_poly(double t) {
    // z^4 + 4 t alpha z^3 + 4 t^2 alpha^2 z^2 with alpha^4 = -27
    Complex alpha = std::pow(27.0, 0.25) *
                    std::exp(Complex(0.0, std::numbers::pi / 4.0));
    return Polynomial({Complex(0.0), Complex(0.0),
                       4.0 * t * t * alpha * alpha, 4.0 * t * alpha,
                       Complex(1.0)});
}

}  // namespace

TEST_CASE("branching_profile: the two quartic deformations") {
    double t = 0.1;
    BranchingProfile pf = branching_profile(f_poly(t));
    // f' = 4 z^2 (z + 3t): double critical point at 0, simple at -0.3
    REQUIRE(pf.critical_points.roots.size() == 2);
    bool seen_double = false, seen_simple = false;
    for (const RootEntry& r : pf.critical_points.roots) {
        if (r.multiplicity == 2) {
            seen_double = true;
            CHECK(std::abs(r.location) < 1e-7);
        } else {
            seen_simple = true;
            CHECK(std::abs(r.location - Complex(-0.3)) < 1e-9);
        }
    }
    CHECK(seen_double);
    CHECK(seen_simple);
    REQUIRE(pf.critical_values.size() == 3);
    // values {0, 0, -27 t^4 = -0.0027}
    int zeros = 0, others = 0;
    for (Complex v : pf.critical_values) {
        if (std::abs(v) < 1e-10)
            ++zeros;
        else {
            ++others;
            CHECK(std::abs(v - Complex(-0.0027)) < 1e-12);
        }
    }
    CHECK(zeros == 2);
    CHECK(others == 1);

    BranchingProfile pg = branching_profile(g_poly(t));
    // g' = 4 z (z + t alpha)(z + 2 t alpha): three simple critical points
    REQUIRE(pg.critical_points.roots.size() == 3);
    for (const RootEntry& r : pg.critical_points.roots)
        CHECK(r.multiplicity == 1);
    int gzeros = 0;
    for (Complex v : pg.critical_values) {
        if (std::abs(v) < 1e-10)
            ++gzeros;
        else
            CHECK(std::abs(v - Complex(-0.0027)) < 1e-10);
    }
    CHECK(gzeros == 2);
}

TEST_CASE("branching_profile: z^2 and degree guard") {
    BranchingProfile p = branching_profile(
        Polynomial({Complex(0.0), Complex(0.0), Complex(1.0)}));
    REQUIRE(p.critical_values.size() == 1);
    CHECK(std::abs(p.critical_values[0]) < 1e-14);
    CHECK_THROWS_AS(
        branching_profile(Polynomial({Complex(1.0), Complex(2.0)})),
        DegenerateInputError);
}

TEST_CASE("same values, non-isomorphic profiles for the f/g pair") {
    for (double t : {1e-1, 1e-2, 1e-3}) {
        CAPTURE(t);
        CHECK(same_branching_values(f_poly(t), g_poly(t), 1e-9));
        CHECK_FALSE(isomorphic_profiles(f_poly(t), g_poly(t)));
    }
    // z^4 has critical values {0, 0, 0}: not the same set as f_t's
    Polynomial z4({Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0),
                   Complex(1.0)});
    CHECK_FALSE(same_branching_values(f_poly(0.1), z4, 1e-9));
    // reflexivity
    CHECK(same_branching_values(f_poly(0.1), f_poly(0.1), 1e-9));
    CHECK(isomorphic_profiles(g_poly(0.05), g_poly(0.05)));
}

TEST_CASE("same_branching_values is symmetric and near-transitive") {
    std::vector<Polynomial> hs = {f_poly(0.1), g_poly(0.1), f_poly(0.05),
                                  g_poly(0.05)};
    double tol = 1e-9;
    for (const Polynomial& h1 : hs)
        for (const Polynomial& h2 : hs) {
            bool ab = same_branching_values(h1, h2, tol);
            bool ba = same_branching_values(h2, h1, tol);
            CHECK(ab == ba);
        }
    // transitive within 2 tol on a chain that does match
    CHECK(same_branching_values(f_poly(0.1), g_poly(0.1), tol));
    CHECK(same_branching_values(g_poly(0.1), f_poly(0.1), tol));
    CHECK(same_branching_values(f_poly(0.1), f_poly(0.1), 2.0 * tol));
}

TEST_CASE("isomorphic_profiles: the cubic pair related by rotation") {
    double t = 0.1;
    Complex j = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
    Polynomial h1({Complex(0.0), Complex(t), Complex(0.0), Complex(1.0)});
    Polynomial h2({Complex(0.0), t * j, Complex(0.0), Complex(1.0)});
    CHECK(isomorphic_profiles(h1, h2));
    CHECK(same_branching_values(h1, h2, 1e-9));
}

TEST_CASE("marked_equal distinguishes the rotated cubic parameters") {
    double t = 0.1;
    Complex j = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
    CoveringLocalModel m1{3, Complex(0.0), {Complex(0.0), Complex(t)}};
    CoveringLocalModel m2{3, Complex(0.0), {Complex(0.0), t * j}};
    CHECK_FALSE(marked_equal(m1, m2, 1e-9));
    CHECK(marked_equal(m1, m1, 1e-9));
    CoveringLocalModel m3 = m1;
    m3.a[0] += Complex(1e-12);
    CHECK(marked_equal(m1, m3, 1e-9));
}

TEST_CASE("symmetric_slice_check") {
    CoveringLocalModel real_model{3, Complex(0.5),
                                  {Complex(0.25), Complex(-0.125)}};
    CHECK(symmetric_slice_check({real_model}, {0}));

    CoveringLocalModel left{3, Complex(0.5),
                            {Complex(0.1, 0.2), Complex(0.0, -0.3)}};
    CoveringLocalModel right = left;
    for (Complex& c : right.a) c = std::conj(c);
    CHECK(symmetric_slice_check({left, right}, {1, 0}));

    // pair carrying equal (not conjugate) non-real parameters fails
    CHECK_FALSE(symmetric_slice_check({left, left}, {1, 0}));

    // a fixed point with non-real parameters also fails
    CHECK_FALSE(symmetric_slice_check({left}, {0}));

    CoveringLocalModel quad{4, Complex(0.5),
                            {Complex(0.0), Complex(0.0), Complex(0.0)}};
    CHECK_THROWS_AS(symmetric_slice_check({left, quad}, {1, 0}),
                    InvalidActionError);
    CHECK_THROWS_AS(symmetric_slice_check({left, right}, {0, 0}),
                    InvalidActionError);
}

TEST_CASE("symmetric functions of branching values") {
    // k = 2: single branching value q + a_0
    CoveringLocalModel quad{2, Complex(0.3, -0.1), {Complex(0.05, 0.02)}};
    std::vector<Complex> e2 = symmetric_functions_of_branching(quad);
    REQUIRE(e2.size() == 1);
    CHECK(std::abs(e2[0] - (quad.q + quad.a[0])) < 1e-12);

    // k = 3, a = 0: values {q, q}
    CoveringLocalModel cube{3, Complex(0.4), {Complex(0.0), Complex(0.0)}};
    std::vector<Complex> e3 = symmetric_functions_of_branching(cube);
    REQUIRE(e3.size() == 2);
    CHECK(std::abs(e3[0] - Complex(0.8)) < 1e-10);
    CHECK(std::abs(e3[1] - Complex(0.16)) < 1e-10);

    // f_t rewritten without the z^3 term (shift z -> z - t):
    // z^4 - 6 t^2 z^2 + 8 t^3 z - 3 t^4; branching values are unchanged
    double t = 0.1;
    CoveringLocalModel ft{4,
                          Complex(0.0),
                          {Complex(-3.0 * t * t * t * t),
                           Complex(8.0 * t * t * t), Complex(-6.0 * t * t)}};
    std::vector<Complex> ef = symmetric_functions_of_branching(ft);
    REQUIRE(ef.size() == 3);
    // values {0, 0, -27 t^4}: e1 = -27 t^4, e2 = e3 = 0
    CHECK(std::abs(ef[0] - Complex(-0.0027)) < 1e-10);
    CHECK(std::abs(ef[1]) < 1e-10);
    CHECK(std::abs(ef[2]) < 1e-10);

    // cross-check against the direct profile of the unshifted polynomial
    BranchingProfile direct = branching_profile(f_poly(t));
    Complex e1(0.0);
    for (Complex v : direct.critical_values) e1 += v;
    CHECK(std::abs(ef[0] - e1) < 1e-10);
}

TEST_CASE("admissibility, cover radius and marking") {
    CoveringLocalModel base{3, Complex(0.4), {Complex(0.0), Complex(0.0)}};
    CHECK(base.cover_radius() == doctest::Approx(0.1));
    CHECK(base.admissible());

    CoveringLocalModel wild{3, Complex(0.4), {Complex(0.0), Complex(2.0)}};
    CHECK_FALSE(wild.admissible());

    CoveringLocalModel origin{2, Complex(0.0), {Complex(0.0)}};
    CHECK(origin.cover_radius() == doctest::Approx(0.25));
    // h = z^2, eps = 0.25: solutions +-0.5, marked one is +0.5
    CHECK(std::abs(origin.marking_point() - Complex(0.5)) < 1e-12);

    // marking varies continuously for small parameters
    CoveringLocalModel nudged = origin;
    nudged.a[0] = Complex(0.01, 0.005);
    Complex mp = nudged.marking_point();
    CHECK(std::abs(mp - Complex(0.5)) < 0.05);
    CHECK(std::abs(nudged.polynomial()(mp) - (nudged.q + 0.25)) < 1e-10);
}

TEST_CASE("total branching order is k - 1 for 500 random polynomials") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        int k = 2 + static_cast<int>(rng() % 7);  // 2..8
        std::vector<Complex> c(k + 1);
        for (int i = 0; i < k; ++i) c[i] = Complex(U(rng), U(rng));
        c[k] = Complex(1.0);
        BranchingProfile p = branching_profile(Polynomial(c));
        CHECK(static_cast<int>(p.critical_values.size()) == k - 1);
        int total = 0;
        for (const RootEntry& r : p.critical_points.roots)
            total += r.multiplicity;
        CHECK(total == k - 1);
    }
}

TEST_CASE("symmetric functions vary polynomially in each parameter") {
    CoveringLocalModel cube{3, Complex(0.4), {Complex(0.02), Complex(-0.01)}};
    for (int j = 0; j <= 1; ++j) {
        PolynomialityCheck c = verify_polynomial_dependence(cube, j);
        CAPTURE(j);
        CHECK(c.pass);
        CHECK(c.max_fit_residual <= 1e-8);
    }
    CoveringLocalModel quartic{4,
                               Complex(0.0),
                               {Complex(-3e-4), Complex(8e-3), Complex(-6e-2)}};
    PolynomialityCheck c = verify_polynomial_dependence(quartic, 1);
    CHECK(c.pass);
}

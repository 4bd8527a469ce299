#include <cmath>
#include <numbers>

#include "doctest.h"
#include "necklace/jacobian.hpp"

using namespace necklace;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("jacobian_at_central: all block claims certify for m = 2..5") {
    for (int m = 2; m <= 5; ++m) {
        JacobianResult R = jacobian_at_central(m);
        REQUIRE(R.blocks.size() == 5);
        for (const auto& b : R.blocks) {
            INFO("m=", m, " block=", b.block_name, " note=", b.note);
            CHECK(b.verdict);
        }
        CHECK(R.surjective);
        CHECK(R.rank == 5 * m - 3);
        // kernel: 1 scaling direction (c1, gamma_m), plus 4 gauge directions
        // (the two proportionality freedoms of the zero blocks, the common
        // real translation of p_plus_dot, and the last node position)
        CHECK(R.kernel_dimension == 5);
    }
}

TEST_CASE("jacobian_at_central: m=2 gamma block is exactly {2 pi, 2}") {
    JacobianResult R = jacobian_at_central(2);
    const BlockReport* v = nullptr;
    for (const auto& b : R.blocks)
        if (b.block_name == "V/gamma_dot") v = &b;
    REQUIRE(v != nullptr);
    REQUIRE(v->matrix.rows() == 2);
    REQUIRE(v->matrix.cols() == 2);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(v->matrix);
    CHECK(svd.singularValues()(0) == doctest::Approx(2.0 * kPi).epsilon(1e-9));
    CHECK(svd.singularValues()(1) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("jacobian_at_central: declared-zero off-blocks are tiny (m=3)") {
    JacobianResult R = jacobian_at_central(3);
    for (const auto& b : R.blocks) {
        if (b.block_name == "H_A/(p_minus,gamma_m)") continue;  // no zero claim
        CHECK(b.largest_offblock_entry <= 1e-8 * std::max(1.0, b.matrix.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("jacobian_at_central: rejects bad m and noisy steps") {
    CHECK_THROWS_AS(jacobian_at_central(1), DegenerateInputError);
    CHECK_THROWS_AS(jacobian_at_central(11), DegenerateInputError);
    CHECK_THROWS(jacobian_at_central(3, 0.05));  // nonlinearity dominates
}

TEST_CASE("build_matrix_A: explicit small cases") {
    MatrixA A2 = build_matrix_A(2);
    REQUIRE(A2.entries.rows() == 1);
    // 1/p_1^2 - 2/(p_1 - p_2)^2 = 1 - 1/2 with p = (-1, 1)
    CHECK(std::abs(A2.entries(0, 0) - Complex(0.5)) < 1e-12);

    MatrixA A4 = build_matrix_A(4);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(A4.entries(i, i)) == doctest::Approx(2.5).epsilon(1e-10));

    MatrixA A5 = build_matrix_A(5);
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(A5.entries(i, i)) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("build_matrix_A: diagonal magnitude (m^2-1)/6 up to m = 50") {
    for (int m = 2; m <= 50; ++m) {
        MatrixA A = build_matrix_A(m);
        double want = double(m * m - 1) / 6.0;
        for (int i = 0; i < m - 1; ++i)
            CHECK(std::abs(std::abs(A.entries(i, i)) - want) < 1e-9 * want);
    }
}

TEST_CASE("certify_matrix_A: dominance margins and invertibility") {
    for (int m : {2, 3, 6, 12, 50}) {
        MatrixACertificate c = certify_matrix_A(build_matrix_A(m));
        CHECK(c.pass);
        CHECK(c.circle_identity_ok);
        CHECK(c.smallest_singular_value > 0.0);
        REQUIRE(c.dominance_margin.size() == static_cast<size_t>(m - 1));
        for (int i = 0; i < m - 1; ++i) {
            CHECK(c.dominance_margin[i] > 0.0);
            CHECK(std::abs(c.dominance_margin[i] - c.expected_margin[i]) < 1e-10);
        }
    }
    // m=2 margin is exactly 2/|p_1 - 1|^2 = 0.5
    MatrixACertificate c2 = certify_matrix_A(build_matrix_A(2));
    CHECK(c2.dominance_margin[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("circle identity at z = i") {
    Complex z(0.0, 1.0);
    double lhs = 1.0 - 2.0 * (1.0 / ((1.0 + z) * (1.0 + z))).real();
    double rhs = 2.0 / std::norm(1.0 + z);
    CHECK(lhs == doctest::Approx(1.0));
    CHECK(rhs == doctest::Approx(1.0));
}

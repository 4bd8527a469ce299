#include "necklace/jacobian.hpp"

#include <cmath>
#include <random>
#include <numbers>

namespace necklace {

namespace {

constexpr double kPi = std::numbers::pi;

// Packed-coordinate layout (see ParameterVector::pack).
struct Layout {
    int m;
    int c1() const { return 0; }
    int gamma_m() const { return 1; }
    int gamma_dot() const { return 2; }          // width m-1
    int beta0() const { return m + 1; }
    int beta_minus_dot() const { return m + 2; }  // width m (V x R)
    int beta_plus_dot() const { return 2 * m + 2; }
    int p_minus() const { return 3 * m + 2; }
    int p_plus_dot() const { return 4 * m + 2; }
    int params() const { return 5 * m + 2; }

    // residual row offsets in ResidualVector::pack (F_base empty)
    int z_minus() const { return 0; }  // width 2m
    int z_plus() const { return 2 * m; }
    int v_a() const { return 3 * m - 1; }
    int h_a() const { return 4 * m - 2; }  // width 2m
    int v_b() const { return 6 * m - 2; }
    int h_b() const { return 7 * m - 3; }  // width 2(m-1)
    int rows() const { return 9 * m - 5; }
};

Eigen::MatrixXd finite_difference(int m, const std::vector<double>& x0, double step) {
    Layout L{m};
    Eigen::MatrixXd J(L.rows(), L.params());
    for (int j = 0; j < L.params(); ++j) {
        double h = step * (1.0 + std::abs(x0[j]));
        std::vector<double> xp = x0, xm = x0;
        xp[j] += h;
        xm[j] -= h;
        auto rp = full_residual(ParameterVector::unpack(m, xp)).pack();
        auto rm = full_residual(ParameterVector::unpack(m, xm)).pack();
        for (int i = 0; i < L.rows(); ++i) J(i, j) = (rp[i] - rm[i]) / (2.0 * h);
    }
    return J;
}

int numeric_rank(const Eigen::MatrixXd& M, double tol) {
    if (M.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++r;
    return r;
}

double singular_value(const Eigen::MatrixXd& M, int k) {  // k-th largest (0-based)
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    if (k >= svd.singularValues().size()) return 0.0;
    return svd.singularValues()(k);
}

double max_abs_submatrix(const Eigen::MatrixXd& J, int r0, int nr,
                         const std::vector<std::pair<int, int>>& col_ranges) {
    double mx = 0.0;
    for (const auto& [c0, nc] : col_ranges)
        mx = std::max(mx, J.block(r0, c0, nr, nc).cwiseAbs().maxCoeff());
    return mx;
}

// Complementary column ranges to [c0, c0+nc).
std::vector<std::pair<int, int>> complement(int total, int c0, int nc) {
    std::vector<std::pair<int, int>> out;
    if (c0 > 0) out.push_back({0, c0});
    if (c0 + nc < total) out.push_back({c0 + nc, total - c0 - nc});
    return out;
}

}  // namespace

JacobianResult jacobian_at_central(int m, double step) {
    if (m < 2 || m > 10)
        throw DegenerateInputError("jacobian_at_central: m must be between 2 and 10");
    Layout L{m};
    ParameterVector X0 = ParameterVector::central(m);
    std::vector<double> x0 = X0.pack();

    Eigen::MatrixXd J1 = finite_difference(m, x0, step);
    Eigen::MatrixXd J = finite_difference(m, x0, 0.5 * step);
    double scale = J.cwiseAbs().maxCoeff();
    if ((J - J1).cwiseAbs().maxCoeff() > 1e-3 * scale)
        throw NoisyJacobianError("jacobian_at_central: entries unstable under step halving");

    JacobianResult out;
    out.full = J;

    // Z^- against beta^- (beta0 and the dotted V x R block): rank m.
    {
        BlockReport b;
        b.block_name = "Z_minus/beta_minus_dot";
        b.matrix = J.block(L.z_minus(), L.beta0(), 2 * m, m + 1);
        int rank = numeric_rank(b.matrix, kRankTol);
        b.smallest_singular_value = singular_value(b.matrix, m - 1);
        b.largest_offblock_entry =
            max_abs_submatrix(J, L.z_minus(), 2 * m, complement(L.params(), L.beta0(), m + 1));
        double norm = b.matrix.cwiseAbs().maxCoeff();
        b.verdict = rank == m && b.largest_offblock_entry <= kOffblockTol * norm;
        b.note = "rank " + std::to_string(rank) + " of target m";
        out.blocks.push_back(std::move(b));
    }

    // Z^+ against beta^+: rank m-1.
    {
        BlockReport b;
        b.block_name = "Z_plus/beta_plus_dot";
        b.matrix = J.block(L.z_plus(), L.beta_plus_dot(), m - 1, m);
        int rank = numeric_rank(b.matrix, kRankTol);
        b.smallest_singular_value = singular_value(b.matrix, m - 2);
        b.largest_offblock_entry = max_abs_submatrix(
            J, L.z_plus(), m - 1, complement(L.params(), L.beta_plus_dot(), m));
        double norm = b.matrix.cwiseAbs().maxCoeff();
        b.verdict = rank == m - 1 && b.largest_offblock_entry <= kOffblockTol * norm;
        b.note = "rank " + std::to_string(rank) + " of target m-1";
        out.blocks.push_back(std::move(b));
    }

    // (V^A, V^B) against gamma_dot, differentiated in unconstrained complex
    // coordinates: exactly -2 pi on the Im components and -2 on the Re ones.
    {
        BlockReport b;
        b.block_name = "V/gamma_dot";
        b.matrix = Eigen::MatrixXd(2 * (m - 1), 2 * (m - 1));
        for (int j = 0; j < m - 1; ++j) {
            for (int part = 0; part < 2; ++part) {
                Complex dh = part == 0 ? Complex(step) : Complex(0.0, step);
                ParameterVector Xp = X0, Xm = X0;
                Xp.gamma_dot[j] += dh;
                Xm.gamma_dot[j] -= dh;
                auto rp = residual_periods(Xp);
                auto rm = residual_periods(Xm);
                for (int i = 0; i < m - 1; ++i) {
                    b.matrix(i, 2 * j + part) = (rp.V_A[i] - rm.V_A[i]) / (2.0 * step);
                    b.matrix(m - 1 + i, 2 * j + part) =
                        (rp.V_B[i] - rm.V_B[i]) / (2.0 * step);
                }
            }
        }
        b.smallest_singular_value = singular_value(b.matrix, 2 * (m - 1) - 1);
        b.largest_offblock_entry = max_abs_submatrix(
            J, L.v_a(), m - 1, complement(L.params(), L.gamma_dot(), m - 1));
        b.largest_offblock_entry = std::max(
            b.largest_offblock_entry,
            max_abs_submatrix(J, L.v_b(), m - 1,
                              complement(L.params(), L.gamma_dot(), m - 1)));
        b.verdict = b.smallest_singular_value >= 1.9 &&
                    b.largest_offblock_entry <= kOffblockTol * (2.0 * kPi);
        b.note = "singular values should be {2 pi, 2}";
        out.blocks.push_back(std::move(b));
    }

    // H^B against p_plus_dot: the derivative pattern (1/2)(delta_jm - delta_ji).
    {
        BlockReport b;
        b.block_name = "H_B/p_plus_dot";
        b.matrix = J.block(L.h_b(), L.p_plus_dot(), 2 * (m - 1), m);
        double pattern_error = 0.0;
        for (int j = 0; j < m; ++j) {
            for (int part = 0; part < 2; ++part) {
                Complex dh = part == 0 ? Complex(step) : Complex(0.0, step);
                ParameterVector Xp = X0, Xm = X0;
                Xp.p_plus_dot[j] += dh;
                Xm.p_plus_dot[j] -= dh;
                auto rp = residual_periods(Xp);
                auto rm = residual_periods(Xm);
                for (int i = 0; i < m - 1; ++i) {
                    Complex d = (rp.H_B[i] - rm.H_B[i]) / (2.0 * step);
                    double expect = 0.5 * ((j == m - 1 ? 1.0 : 0.0) - (j == i ? 1.0 : 0.0));
                    Complex want = part == 0 ? Complex(expect) : Complex(0.0, expect);
                    pattern_error = std::max(pattern_error, std::abs(d - want));
                }
            }
        }
        int rank = numeric_rank(b.matrix, kRankTol);
        b.smallest_singular_value = singular_value(b.matrix, m - 2);
        std::vector<std::pair<int, int>> off = {{L.c1(), 2},
                                                {L.gamma_dot(), m - 1},
                                                {L.p_minus(), m}};
        b.largest_offblock_entry = max_abs_submatrix(J, L.h_b(), 2 * (m - 1), off);
        b.verdict = rank == m - 1 && pattern_error <= 1e-6 &&
                    b.largest_offblock_entry <= kOffblockTol;
        b.note = "pattern error " + std::to_string(pattern_error);
        out.blocks.push_back(std::move(b));
    }

    // H^A against (p_1^-, ..., p_{m-1}^-, gamma_m): an isomorphism onto the
    // m-dimensional symmetric target.
    {
        BlockReport b;
        b.block_name = "H_A/(p_minus,gamma_m)";
        b.matrix = Eigen::MatrixXd(2 * m, m);
        b.matrix.leftCols(m - 1) = J.block(L.h_a(), L.p_minus(), 2 * m, m - 1);
        b.matrix.col(m - 1) = J.block(L.h_a(), L.gamma_m(), 2 * m, 1);
        int rank = numeric_rank(b.matrix, kRankTol);
        b.smallest_singular_value = singular_value(b.matrix, m - 1);
        b.verdict = rank == m;

        // Row operation: sum_i p_i^- times the complex H^A rows should give
        // zero on every p^- column and -2 pi m (vertical) on the gamma_m one.
        ParameterVector X0c = ParameterVector::central(m);
        double worst = 0.0;
        for (int c = 0; c < m; ++c) {
            Complex combo(0.0);
            for (int i = 0; i < m; ++i) {
                Complex row(b.matrix(2 * i, c), b.matrix(2 * i + 1, c));
                combo += X0c.p_minus[i] * row;
            }
            Complex want = c == m - 1 ? Complex(0.0, -2.0 * kPi * m) : Complex(0.0);
            worst = std::max(worst, std::abs(combo - want));
        }
        b.verdict = b.verdict && worst <= 1e-6;
        b.note = "row-operation error " + std::to_string(worst);
        out.blocks.push_back(std::move(b));
    }

    out.rank = numeric_rank(J, kRankTol);
    out.kernel_dimension = L.params() - out.rank;
    out.surjective = out.rank == 5 * m - 3;
    return out;
}

MatrixA build_matrix_A(int m) {
    if (m < 2) throw DegenerateInputError("build_matrix_A: m >= 2 required");
    std::vector<Complex> p(m);
    for (int i = 1; i <= m; ++i) p[i - 1] = std::polar(1.0, 2.0 * kPi * i / m);
    MatrixA A;
    A.m = m;
    A.entries = Eigen::MatrixXcd(m - 1, m - 1);
    for (int i = 0; i < m - 1; ++i) {
        for (int j = 0; j < m - 1; ++j) {
            if (i != j) {
                Complex d = p[i] - p[j];
                A.entries(i, j) = 2.0 / (d * d);
            }
        }
        Complex diag = double(m - 1) / (p[i] * p[i]);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            Complex d = p[i] - p[j];
            diag -= 2.0 / (d * d);
        }
        A.entries(i, i) = diag;
    }
    return A;
}

MatrixACertificate certify_matrix_A(const MatrixA& A) {
    int m = A.m;
    MatrixACertificate cert;
    cert.diagonal_magnitude = std::abs(A.entries(0, 0));
    for (int i = 0; i < m - 1; ++i) {
        double off = 0.0;
        for (int j = 0; j < m - 1; ++j)
            if (j != i) off += std::abs(A.entries(i, j));
        cert.dominance_margin.push_back(std::abs(A.entries(i, i)) - off);
        Complex p = std::polar(1.0, 2.0 * kPi * (i + 1) / m);
        cert.expected_margin.push_back(2.0 / std::norm(p - 1.0));
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A.entries);
    cert.smallest_singular_value = svd.singularValues()(svd.singularValues().size() - 1);

    cert.circle_identity_ok = true;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(0.05, 2.0 * kPi - 0.05);
    for (int k = 0; k < 100; ++k) {
        Complex z = std::polar(1.0, u(rng));
        double lhs = 1.0 - 2.0 * (1.0 / ((1.0 + z) * (1.0 + z))).real();
        double rhs = 2.0 / std::norm(1.0 + z);
        if (std::abs(lhs - rhs) > 1e-12) cert.circle_identity_ok = false;
    }

    cert.pass = cert.circle_identity_ok && cert.smallest_singular_value > 0.0;
    for (size_t i = 0; i < cert.dominance_margin.size(); ++i) {
        if (cert.dominance_margin[i] <= 0.0 ||
            std::abs(cert.dominance_margin[i] - cert.expected_margin[i]) > 1e-10)
            cert.pass = false;
        if (std::abs(std::abs(A.entries(i, i)) - double(m * m - 1) / 6.0) > 1e-9)
            cert.pass = false;
    }
    return cert;
}

}  // namespace necklace

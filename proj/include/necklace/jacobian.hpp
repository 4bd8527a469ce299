#ifndef NECKLACE_JACOBIAN_HPP
#define NECKLACE_JACOBIAN_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "necklace/equations.hpp"

namespace necklace {

/// One verified claim about the differential of full_residual at the central
/// parameter vector.
struct BlockReport {
    std::string block_name;
    Eigen::MatrixXd matrix;  // rows = residual block, cols = parameter block
    double smallest_singular_value = 0.0;
    double largest_offblock_entry = 0.0;
    bool verdict = false;
    std::string note;
};

struct JacobianResult {
    // rows = packed residual entries, cols = packed parameters (5m + 2)
    Eigen::MatrixXd full;
    std::vector<BlockReport> blocks;
    int rank = 0;              // singular values > 1e-6
    int kernel_dimension = 0;  // parameter dimension - rank
    bool surjective = false;   // rank equals the free target dimension 5m - 3
};

/// Rank tolerances: singular values > kRankTol count as nonzero; "zero"
/// off-blocks must stay below kOffblockTol times the block norm.
inline constexpr double kRankTol = 1e-6;
inline constexpr double kOffblockTol = 1e-8;

/// Central-difference Jacobian of full_residual at the central value, with
/// step-halving consistency control (NoisyJacobianError on disagreement),
/// plus the block certificates of the degenerate-limit lemma.
JacobianResult jacobian_at_central(int m, double step = 1e-6);

/// The (m-1) x (m-1) interaction matrix at the central node positions
/// p_i = omega^i: a_ij = 2/(p_i - p_j)^2 off the diagonal and
/// a_ii = (m-1)/p_i^2 - sum_{j <= m, j != i} 2/(p_i - p_j)^2.
struct MatrixA {
    int m = 2;
    Eigen::MatrixXcd entries;
};

MatrixA build_matrix_A(int m);

struct MatrixACertificate {
    std::vector<double> dominance_margin;  // |a_ii| - sum_{j != i} |a_ij| per row
    std::vector<double> expected_margin;   // 2/|p_i - 1|^2 per row
    double diagonal_magnitude = 0.0;       // common |a_ii|, equals (m^2-1)/6
    double smallest_singular_value = 0.0;
    bool circle_identity_ok = false;  // 1 - 2 Re 1/(1+z)^2 = 2/|1+z|^2 on |z| = 1
    bool pass = false;
};

MatrixACertificate certify_matrix_A(const MatrixA& A);

}  // namespace necklace

#endif

#ifndef NECKLACE_EQUATIONS_HPP
#define NECKLACE_EQUATIONS_HPP

#include "necklace/gluing.hpp"

namespace necklace {

/// Sigma-symmetric parameter vector in block-triangular coordinates:
///   gamma_i   = gamma_m + gamma_dot_i          (1 <= i <= m-1)
///   beta_i^-  = gamma_i + beta_minus_dot_i     (1 <= i <= m)
///   beta_0^-  = c_1 + beta0_minus_dot
///   beta_i^+  = gamma_i + beta_plus_dot_i      (1 <= i <= m)
///   p_i^+     = conj(p_i^-) + p_plus_dot_i     (1 <= i <= m)
/// The central value has every dotted coordinate zero, gamma_m = 1/(m-1),
/// p_i^- = omega^i and c_1 = -1.
///
/// V is the space of length-(m-1) complex vectors with z_{m-i} = conj(z_i);
/// "V x R" appends a real m-th entry.
struct ParameterVector {
    int m = 2;
    double c1 = -1.0;
    double gamma_m = 1.0;
    std::vector<Complex> gamma_dot;       // m-1 entries, in V
    double beta0_minus_dot = 0.0;
    std::vector<Complex> beta_minus_dot;  // m entries, in V x R
    std::vector<Complex> beta_plus_dot;   // m entries, in V x R
    std::vector<Complex> p_minus;         // m entries, in V x R (positions)
    std::vector<Complex> p_plus_dot;      // m entries, in V x R

    static ParameterVector central(int m);
    GluingConfiguration materialize() const;

    /// Free real coordinates, order: c1, gamma_m, gamma_dot, beta0_minus_dot,
    /// beta_minus_dot, beta_plus_dot, p_minus, p_plus_dot.  Total 5m + 2.
    std::vector<double> pack() const;
    static ParameterVector unpack(int m, const std::vector<double>& x);
    static int real_dimension(int m) { return 5 * m + 2; }
};

/// V packing: pairs (Re z_i, Im z_i) for 1 <= i < m-i, then the real middle
/// entry when m is even.  m-1 reals total.
void pack_v(const std::vector<Complex>& v, int m, std::vector<double>& out);
std::vector<Complex> unpack_v(int m, const std::vector<double>& x, size_t offset);

/// The evaluated equation system at the degenerate limit.
struct ResidualVector {
    std::vector<Complex> Z_minus;  // m entries, Z_{m+1-i} = conj(Z_i)
    std::vector<double> Z_plus;    // m-1 coefficients of a degree <= m-2 polynomial
    std::vector<double> V_A;       // m-1 entries
    std::vector<Complex> H_A;      // m entries, H_{m-i} = -conj(H_i)
    std::vector<double> V_B;       // m-1 entries, V_{m-i} = V_i
    std::vector<Complex> H_B;      // m-1 entries, in V
    std::vector<double> F_base;    // base-surface equations (empty for catenoid)

    double max_norm() const;
    /// All entries as raw reals (Re, Im per complex entry), fixed order.
    std::vector<double> pack() const;
};

/// Orders the simple zeros of phi3 on the minus sphere so that
/// zeta_{m+1-i} = conj(zeta_i) (sorted by argument); with `previous` given,
/// labels are carried over by nearest-neighbour matching instead.
RootSet label_zeros(const MeromorphicForm& phi3_minus, const RootSet* previous = nullptr);

/// Z^-_i = g^-(zeta_i) at the labeled zeros of phi3 on the minus sphere.
std::vector<Complex> residual_Z_minus(const ParameterVector& X);

/// Z^+ = P - R where P is the monic numerator of g^+ (degree m-1) and R the
/// monic polynomial of the zeros of phi3 on the plus sphere clustered inside
/// radius 0.5 around 0.
std::vector<double> residual_Z_plus(const ParameterVector& X);

struct PeriodResiduals {
    std::vector<double> V_A;
    std::vector<Complex> H_A;
    std::vector<double> V_B;
    std::vector<Complex> H_B;
};

/// V^A_j = -2 pi Im(gamma_j);
/// H^A_i = (1/2)(conj oint_{C(p_i^+,eps)} g^+ phi3  +  oint_{C(p_i^-,eps)} g^- phi3),
/// evaluated by residues (pi i (Res_{p_i^-} g^- phi3 - conj Res_{p_i^+} g^+ phi3));
/// V^B_i = -2 Re(gamma_i - gamma_m);
/// H^B_i = (1/2) conj int_{p_i^-}^{p_m^-} phi3/g^-  -  (1/2) int_{p_m^+}^{p_i^+} phi3/g^+
/// by quadrature along fixed radial-arc-radial paths at radius 0.6.
PeriodResiduals residual_periods(const ParameterVector& X);

/// H^A by direct quadrature of the two circle integrals (cross-check of the
/// residue evaluation).
std::vector<Complex> horizontal_A_quadrature(const ParameterVector& X);

/// Concatenation (F_base, Z^-, Z^+, V^A, H^A, V^B, H^B); vanishes at the
/// central parameter vector.
ResidualVector full_residual(const ParameterVector& X);

}  // namespace necklace

#endif

#include "necklace/equations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace necklace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClusterRadius = 0.5;  // Weierstrass-polynomial disk around 0
constexpr double kPathRadius = 0.6;     // arc radius of the B-period paths

double wrap_angle(double a) {
    while (a > std::numbers::pi) a -= kTwoPi;
    while (a <= -std::numbers::pi) a += kTwoPi;
    return a;
}

void check_lengths(const ParameterVector& X) {
    size_t m = static_cast<size_t>(X.m);
    if (X.m < 2 || X.gamma_dot.size() != m - 1 || X.beta_minus_dot.size() != m ||
        X.beta_plus_dot.size() != m || X.p_minus.size() != m || X.p_plus_dot.size() != m)
        throw DegenerateConfigurationError("ParameterVector lengths inconsistent with m");
}

}  // namespace

ParameterVector ParameterVector::central(int m) {
    if (m < 2) throw DegenerateConfigurationError("central parameter vector requires m >= 2");
    ParameterVector X;
    X.m = m;
    X.c1 = -1.0;
    X.gamma_m = 1.0 / (m - 1);
    X.gamma_dot.assign(m - 1, Complex(0.0));
    X.beta0_minus_dot = 0.0;
    X.beta_minus_dot.assign(m, Complex(0.0));
    X.beta_plus_dot.assign(m, Complex(0.0));
    X.p_minus.resize(m);
    for (int i = 1; i <= m; ++i) X.p_minus[i - 1] = std::polar(1.0, kTwoPi * i / m);
    X.p_plus_dot.assign(m, Complex(0.0));
    return X;
}

GluingConfiguration ParameterVector::materialize() const {
    check_lengths(*this);
    GluingConfiguration cfg;
    cfg.m = m;
    cfg.t = 0.0;
    cfg.epsilon = 0.1;
    cfg.c = {c1};
    cfg.gamma.resize(m);
    for (int i = 0; i + 1 < m; ++i) cfg.gamma[i] = gamma_m + gamma_dot[i];
    cfg.gamma[m - 1] = gamma_m;
    cfg.beta_minus.resize(m + 1);
    cfg.beta_minus[0] = c1 + beta0_minus_dot;
    cfg.beta_plus.resize(m);
    for (int i = 0; i < m; ++i) {
        cfg.beta_minus[i + 1] = cfg.gamma[i] + beta_minus_dot[i];
        cfg.beta_plus[i] = cfg.gamma[i] + beta_plus_dot[i];
    }
    cfg.p_minus = p_minus;
    cfg.p_plus.resize(m);
    for (int i = 0; i < m; ++i) cfg.p_plus[i] = std::conj(p_minus[i]) + p_plus_dot[i];
    cfg.base = catenoid();
    return cfg;
}

void pack_v(const std::vector<Complex>& v, int m, std::vector<double>& out) {
    for (int i = 1; 2 * i < m; ++i) {
        out.push_back(v[i - 1].real());
        out.push_back(v[i - 1].imag());
    }
    if (m % 2 == 0) out.push_back(v[m / 2 - 1].real());
}

std::vector<Complex> unpack_v(int m, const std::vector<double>& x, size_t offset) {
    std::vector<Complex> v(m - 1);
    size_t k = offset;
    for (int i = 1; 2 * i < m; ++i) {
        v[i - 1] = Complex(x[k], x[k + 1]);
        v[m - i - 1] = std::conj(v[i - 1]);
        k += 2;
    }
    if (m % 2 == 0) v[m / 2 - 1] = Complex(x[k]);
    return v;
}

namespace {

// V x R (length m): the V part followed by the real last entry.
void pack_vr(const std::vector<Complex>& v, int m, std::vector<double>& out) {
    pack_v(v, m, out);
    out.push_back(v[m - 1].real());
}

std::vector<Complex> unpack_vr(int m, const std::vector<double>& x, size_t offset) {
    std::vector<Complex> v = unpack_v(m, x, offset);
    v.push_back(Complex(x[offset + m - 1]));
    return v;
}

}  // namespace

std::vector<double> ParameterVector::pack() const {
    check_lengths(*this);
    std::vector<double> out;
    out.reserve(real_dimension(m));
    out.push_back(c1);
    out.push_back(gamma_m);
    pack_v(gamma_dot, m, out);
    out.push_back(beta0_minus_dot);
    pack_vr(beta_minus_dot, m, out);
    pack_vr(beta_plus_dot, m, out);
    pack_vr(p_minus, m, out);
    pack_vr(p_plus_dot, m, out);
    return out;
}

ParameterVector ParameterVector::unpack(int m, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != real_dimension(m))
        throw DegenerateConfigurationError("packed parameter vector has wrong length");
    ParameterVector X;
    X.m = m;
    size_t k = 0;
    X.c1 = x[k++];
    X.gamma_m = x[k++];
    X.gamma_dot = unpack_v(m, x, k);
    k += m - 1;
    X.beta0_minus_dot = x[k++];
    X.beta_minus_dot = unpack_vr(m, x, k);
    k += m;
    X.beta_plus_dot = unpack_vr(m, x, k);
    k += m;
    X.p_minus = unpack_vr(m, x, k);
    k += m;
    X.p_plus_dot = unpack_vr(m, x, k);
    return X;
}

double ResidualVector::max_norm() const {
    double mx = 0.0;
    for (const auto& z : Z_minus) mx = std::max(mx, std::abs(z));
    for (double v : Z_plus) mx = std::max(mx, std::abs(v));
    for (double v : V_A) mx = std::max(mx, std::abs(v));
    for (const auto& z : H_A) mx = std::max(mx, std::abs(z));
    for (double v : V_B) mx = std::max(mx, std::abs(v));
    for (const auto& z : H_B) mx = std::max(mx, std::abs(z));
    for (double v : F_base) mx = std::max(mx, std::abs(v));
    return mx;
}

std::vector<double> ResidualVector::pack() const {
    std::vector<double> out(F_base);
    for (const auto& z : Z_minus) {
        out.push_back(z.real());
        out.push_back(z.imag());
    }
    out.insert(out.end(), Z_plus.begin(), Z_plus.end());
    out.insert(out.end(), V_A.begin(), V_A.end());
    for (const auto& z : H_A) {
        out.push_back(z.real());
        out.push_back(z.imag());
    }
    out.insert(out.end(), V_B.begin(), V_B.end());
    for (const auto& z : H_B) {
        out.push_back(z.real());
        out.push_back(z.imag());
    }
    return out;
}

RootSet label_zeros(const MeromorphicForm& phi3_minus, const RootSet* previous) {
    RootSet zs = phi3_minus.density().zeros();
    for (const auto& r : zs.roots)
        if (r.multiplicity >= 2)
            throw LabelingAmbiguityError("label_zeros: zero of multiplicity >= 2");
    if (previous == nullptr) return zs;  // RootSet order is the sigma-pairing order

    if (previous->roots.size() != zs.roots.size())
        throw LabelingAmbiguityError("label_zeros: zero count changed since previous labeling");
    RootSet out;
    std::vector<bool> used(zs.roots.size(), false);
    for (const auto& prev : previous->roots) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < zs.roots.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(zs.roots[j].location - prev.location);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        used[best] = true;
        out.roots.push_back(zs.roots[best]);
    }
    return out;
}

std::vector<Complex> residual_Z_minus(const ParameterVector& X) {
    GluedComponents parts = build_components(X.materialize());
    RootSet zeta = label_zeros(parts.phi3_minus);
    if (static_cast<int>(zeta.roots.size()) != X.m)
        throw TrackingError("residual_Z_minus: expected m simple zeros on the minus sphere");
    std::vector<Complex> Z;
    for (const auto& r : zeta.roots) Z.push_back(parts.g_minus(r.location));
    return Z;
}

std::vector<double> residual_Z_plus(const ParameterVector& X) {
    GluedComponents parts = build_components(X.materialize());
    // All zeros of phi3 on the plus sphere must stay in the clustering disk;
    // then the Weierstrass polynomial R is the full monic numerator.
    const RationalFunction& f = parts.phi3_plus.density();
    RootSet zs = f.zeros();
    int inside = 0;
    for (const auto& r : zs.roots) {
        if (std::abs(r.location) > kClusterRadius)
            throw TrackingError("residual_Z_plus: zero escaped the clustering disk");
        inside += r.multiplicity;
    }
    if (inside != X.m - 1)
        throw TrackingError("residual_Z_plus: zero count on the plus sphere is not m-1");
    Polynomial R = f.numerator() * (1.0 / f.numerator().leading());
    Polynomial P =
        parts.g_plus.numerator() * (1.0 / parts.g_plus.numerator().leading());
    if (P.degree() != X.m - 1)
        throw DegenerateConfigurationError("residual_Z_plus: deg g^+ numerator is not m-1");
    Polynomial Z = P - R;
    std::vector<double> out(X.m - 1, 0.0);
    for (int k = 0; k <= Z.degree() && k < X.m - 1; ++k) out[k] = Z.coefficient(k).real();
    if (Z.degree() > X.m - 2 && std::abs(Z.leading()) > 1e-10)
        throw TrackingError("residual_Z_plus: difference P - R has degree > m-2");
    return out;
}

namespace {

// int phi3/g along the fixed radial-arc-radial path from p_a to p_b.  The
// two densities share a denominator by construction, so the integrand is the
// numerator ratio (regular at the endpoints).
Complex b_path_integral(const RationalFunction& phi3_density, const RationalFunction& g,
                        Complex p_a, Complex p_b) {
    const auto& dn = phi3_density.denominator().coefficients();
    const auto& dg = g.denominator().coefficients();
    double diff = 0.0, scale = 0.0;
    for (size_t i = 0; i < std::max(dn.size(), dg.size()); ++i) {
        Complex a = i < dn.size() ? dn[i] : Complex(0.0);
        Complex b = i < dg.size() ? dg[i] : Complex(0.0);
        diff = std::max(diff, std::abs(a - b));
        scale = std::max({scale, std::abs(a), std::abs(b)});
    }
    if (diff > 1e-12 * scale)
        throw NumericFailureError("b_path_integral: density denominators do not match", diff);
    MeromorphicForm q(RationalFunction(phi3_density.numerator(), g.numerator()));

    double aa = std::arg(p_a), ab = std::arg(p_b);
    Complex ua = std::polar(kPathRadius, aa), ub = std::polar(kPathRadius, ab);
    Complex total = path_integral(q, SegmentPath{p_a, ua});
    double sweep = wrap_angle(ab - aa);
    if (std::abs(std::abs(sweep) - std::numbers::pi) < 1e-9) {
        // Antipodal endpoints: the shorter arc is ambiguous and a single arc
        // breaks the mirror symmetry.  Take the average of the two half
        // circles (the sigma-invariant principal value).
        Complex up = path_integral(q, ArcPath{Complex(0.0), kPathRadius, aa, aa + sweep});
        Complex down = path_integral(q, ArcPath{Complex(0.0), kPathRadius, aa, aa - sweep});
        total += 0.5 * (up + down);
    } else {
        total += path_integral(q, ArcPath{Complex(0.0), kPathRadius, aa, aa + sweep});
    }
    total += path_integral(q, SegmentPath{ub, p_b});
    return total;
}

}  // namespace

PeriodResiduals residual_periods(const ParameterVector& X) {
    GluingConfiguration cfg = X.materialize();
    GluedComponents parts = build_components(cfg);
    PeriodResiduals out;

    for (int j = 0; j + 1 < X.m; ++j) out.V_A.push_back(-kTwoPi * cfg.gamma[j].imag() / 1.0);

    MeromorphicForm gm_phi3(parts.g_minus * parts.phi3_minus.density());
    MeromorphicForm gp_phi3(parts.g_plus * parts.phi3_plus.density());
    for (int i = 0; i < X.m; ++i) {
        Complex rm = residue_at(gm_phi3, cfg.p_minus[i]);
        Complex rp = residue_at(gp_phi3, cfg.p_plus[i]);
        out.H_A.push_back(Complex(0.0, std::numbers::pi) * (rm - std::conj(rp)));
    }

    for (int i = 0; i + 1 < X.m; ++i)
        out.V_B.push_back(-2.0 * (cfg.gamma[i].real() - cfg.gamma[X.m - 1].real()));

    for (int i = 0; i + 1 < X.m; ++i) {
        Complex Im = b_path_integral(parts.phi3_minus.density(), parts.g_minus,
                                     cfg.p_minus[i], cfg.p_minus[X.m - 1]);
        Complex Ip = b_path_integral(parts.phi3_plus.density(), parts.g_plus,
                                     cfg.p_plus[X.m - 1], cfg.p_plus[i]);
        out.H_B.push_back(0.5 * std::conj(Im) - 0.5 * Ip);
    }
    return out;
}

std::vector<Complex> horizontal_A_quadrature(const ParameterVector& X) {
    GluingConfiguration cfg = X.materialize();
    GluedComponents parts = build_components(cfg);
    MeromorphicForm gm_phi3(parts.g_minus * parts.phi3_minus.density());
    MeromorphicForm gp_phi3(parts.g_plus * parts.phi3_plus.density());
    std::vector<Complex> H;
    for (int i = 0; i < X.m; ++i) {
        double am = std::arg(cfg.p_minus[i]);
        double ap = std::arg(cfg.p_plus[i]);
        Complex Im = path_integral(
            gm_phi3, ArcPath{cfg.p_minus[i], cfg.epsilon, am, am + kTwoPi});
        Complex Ip = path_integral(
            gp_phi3, ArcPath{cfg.p_plus[i], cfg.epsilon, ap, ap + kTwoPi});
        H.push_back(0.5 * (std::conj(Ip) + Im));
    }
    return H;
}

ResidualVector full_residual(const ParameterVector& X) {
    ResidualVector R;
    R.Z_minus = residual_Z_minus(X);
    R.Z_plus = residual_Z_plus(X);
    PeriodResiduals P = residual_periods(X);
    R.V_A = std::move(P.V_A);
    R.H_A = std::move(P.H_A);
    R.V_B = std::move(P.V_B);
    R.H_B = std::move(P.H_B);
    return R;
}

}  // namespace necklace

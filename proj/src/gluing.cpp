#include "necklace/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace necklace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

RationalFunction simple_pole_term(Complex coefficient, Complex pole) {
    return RationalFunction(Polynomial::constant(coefficient), Polynomial({-pole, Complex(1.0)}),
                            false);
}

void require_sizes(const GluingConfiguration& cfg) {
    size_t m = static_cast<size_t>(cfg.m);
    if (cfg.m < 2) throw DegenerateConfigurationError("gluing requires m >= 2");
    if (cfg.beta_minus.size() != m + 1 || cfg.beta_plus.size() != m ||
        cfg.p_minus.size() != m || cfg.p_plus.size() != m || cfg.gamma.size() != m)
        throw DegenerateConfigurationError("parameter sequence lengths inconsistent with m");
    if (cfg.c.size() != 1)
        throw DegenerateConfigurationError(
            "only the catenoid base (a single finite growth c_1) is supported");
}

void require_distinct_points(const std::vector<Complex>& p, bool exclude_origin) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (exclude_origin && std::abs(p[i]) < 1e-9)
            throw DegenerateConfigurationError("node point collides with the origin");
        for (size_t j = i + 1; j < p.size(); ++j)
            if (std::abs(p[i] - p[j]) < 1e-9)
                throw DegenerateConfigurationError("coincident node points");
    }
}

// Signed turning statistics of a closed polygon.
void turning_statistics(const std::vector<Complex>& pts, double& total, double& negative) {
    total = 0.0;
    double positive = 0.0;
    negative = 0.0;
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        Complex e1 = pts[(i + 1) % n] - pts[i];
        Complex e2 = pts[(i + 2) % n] - pts[(i + 1) % n];
        double cross = e1.real() * e2.imag() - e1.imag() * e2.real();
        double dot = e1.real() * e2.real() + e1.imag() * e2.imag();
        double angle = std::atan2(cross, dot);
        total += std::abs(angle);
        (angle >= 0.0 ? positive : negative) += std::abs(angle);
    }
    // Report the minority sign as "negative" turning regardless of orientation.
    negative = std::min(positive, negative);
}

}  // namespace

GluingConfiguration central_configuration(int m) {
    if (m < 2) throw DegenerateConfigurationError("central_configuration requires m >= 2");
    GluingConfiguration cfg;
    cfg.m = m;
    cfg.t = 0.0;
    cfg.epsilon = 0.1;
    double g = 1.0 / (m - 1);
    cfg.beta_minus.assign(m + 1, Complex(g));
    cfg.beta_minus[0] = Complex(-1.0);
    cfg.beta_plus.assign(m, Complex(g));
    cfg.gamma.assign(m, Complex(g));
    cfg.p_minus.resize(m);
    cfg.p_plus.resize(m);
    for (int i = 1; i <= m; ++i) {
        cfg.p_minus[i - 1] = std::polar(1.0, kTwoPi * i / m);
        cfg.p_plus[i - 1] = std::polar(1.0, -kTwoPi * i / m);
    }
    cfg.c = {-1.0};
    cfg.base = catenoid();
    return cfg;
}

SigmaSymmetryReport check_sigma_symmetry(const GluingConfiguration& cfg, double tol) {
    SigmaSymmetryReport report;
    auto complain = [&](std::string msg) {
        report.pass = false;
        report.issues.push_back(std::move(msg));
    };
    int m = cfg.m;
    auto check_v = [&](const std::vector<Complex>& v, int offset, const std::string& name) {
        // entries name[offset .. offset+m-1] correspond to indices 1..m
        for (int i = 1; i < m; ++i) {
            Complex a = v[offset + i - 1];
            Complex b = v[offset + (m - i) - 1];
            if (std::abs(b - std::conj(a)) > tol)
                complain(name + ": entry " + std::to_string(m - i) +
                         " is not the conjugate of entry " + std::to_string(i));
        }
        if (std::abs(v[offset + m - 1].imag()) > tol)
            complain(name + ": entry " + std::to_string(m) + " is not real");
    };
    if (cfg.beta_minus.size() == static_cast<size_t>(m + 1)) {
        if (std::abs(cfg.beta_minus[0].imag()) > tol) complain("beta_minus: entry 0 not real");
        check_v(cfg.beta_minus, 1, "beta_minus");
    } else {
        complain("beta_minus has wrong length");
    }
    if (cfg.beta_plus.size() == static_cast<size_t>(m))
        check_v(cfg.beta_plus, 0, "beta_plus");
    else
        complain("beta_plus has wrong length");
    if (cfg.gamma.size() == static_cast<size_t>(m))
        check_v(cfg.gamma, 0, "gamma");
    else
        complain("gamma has wrong length");
    if (cfg.p_minus.size() == static_cast<size_t>(m))
        check_v(cfg.p_minus, 0, "p_minus");
    else
        complain("p_minus has wrong length");
    if (cfg.p_plus.size() == static_cast<size_t>(m))
        check_v(cfg.p_plus, 0, "p_plus");
    else
        complain("p_plus has wrong length");
    return report;
}

GluedComponents build_components(const GluingConfiguration& cfg) {
    require_sizes(cfg);
    require_distinct_points(cfg.p_minus, true);
    require_distinct_points(cfg.p_plus, true);
    for (const auto& b : cfg.beta_minus)
        if (std::abs(b) < 1e-12) throw DegenerateConfigurationError("vanishing beta parameter");
    for (const auto& b : cfg.beta_plus)
        if (std::abs(b) < 1e-12) throw DegenerateConfigurationError("vanishing beta parameter");

    GluedComponents out;
    RationalFunction gm = simple_pole_term(cfg.beta_minus[0], Complex(0.0));
    for (int i = 0; i < cfg.m; ++i) gm = gm + simple_pole_term(cfg.beta_minus[i + 1], cfg.p_minus[i]);
    out.g_minus = gm;

    RationalFunction gp = simple_pole_term(cfg.beta_plus[0], cfg.p_plus[0]);
    for (int i = 1; i < cfg.m; ++i) gp = gp + simple_pole_term(cfg.beta_plus[i], cfg.p_plus[i]);
    out.g_plus = gp;

    double csum = 0.0;
    for (double ci : cfg.c) csum += ci;
    out.phi3_sigma =
        MeromorphicForm(simple_pole_term(Complex(-cfg.c[0]), Complex(0.0)));
    RationalFunction fminus = simple_pole_term(Complex(-csum), Complex(0.0));
    for (int i = 0; i < cfg.m; ++i)
        fminus = fminus + simple_pole_term(-cfg.gamma[i], cfg.p_minus[i]);
    out.phi3_minus = MeromorphicForm(fminus);
    RationalFunction fplus = simple_pole_term(cfg.gamma[0], cfg.p_plus[0]);
    for (int i = 1; i < cfg.m; ++i) fplus = fplus + simple_pole_term(cfg.gamma[i], cfg.p_plus[i]);
    out.phi3_plus = MeromorphicForm(fplus);
    return out;
}

Complex node_transition(Complex v, double t, NeckKind neck, double epsilon) {
    if (v == Complex(0.0)) throw DegenerateInputError("node_transition: v = 0");
    if (t <= 0.0 || epsilon <= 0.0 || epsilon >= 1.0)
        throw DegenerateInputError("node_transition: need 0 < t and 0 < epsilon < 1");
    double s = neck == NeckKind::TopNode ? t : t * t;
    double lo = s / epsilon, hi = epsilon;
    double a = std::abs(v);
    if (a < lo * (1.0 - 1e-12) || a > hi * (1.0 + 1e-12))
        throw OutOfGluingRegionError("node_transition: |v| outside the gluing annulus");
    return s / v;
}

double limit_graph(const GluingConfiguration& cfg, GraphSide side, Complex z) {
    require_sizes(cfg);
    const std::vector<Complex>& p = side == GraphSide::Plus ? cfg.p_plus : cfg.p_minus;
    double u = 0.0;
    if (side == GraphSide::Minus) {
        if (std::abs(z) < 1e-12) throw SingularPointError("limit_graph: logarithm singularity");
        u -= std::log(std::abs(z));
    }
    for (int i = 0; i < cfg.m; ++i) {
        double d = std::abs(z - p[i]);
        if (d < 1e-12) throw SingularPointError("limit_graph: logarithm singularity");
        u += cfg.gamma[i].real() * std::log(d);
    }
    return u;
}

std::vector<double> critical_heights(const GluingConfiguration& cfg, GraphSide side) {
    require_sizes(cfg);
    // Analytic derivative of the graph potential; its zeros carry the
    // critical values.
    RationalFunction d;
    if (side == GraphSide::Minus) d = simple_pole_term(Complex(-1.0), Complex(0.0));
    const std::vector<Complex>& p = side == GraphSide::Plus ? cfg.p_plus : cfg.p_minus;
    for (int i = 0; i < cfg.m; ++i) {
        RationalFunction term = simple_pole_term(cfg.gamma[i], p[i]);
        d = d.is_zero() ? term : d + term;
    }
    std::vector<double> out;
    if (d.numerator().degree() < 1) return out;
    for (const auto& r : poly_roots(d.numerator()).roots) {
        double u = limit_graph(cfg, side, r.location);
        out.push_back(side == GraphSide::Plus ? u : -u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              out.end());
    return out;
}

namespace {

// First radius in [r_lo, r_hi] (scanning up if ascending, down otherwise)
// where f - level changes sign, refined by bisection.  Returns < 0 if no
// crossing is bracketed.
double radial_crossing(const std::function<double(double)>& f, double r_lo, double r_hi,
                       double level, bool ascending) {
    const int kScan = 512;
    double lratio = std::log(r_hi / r_lo);
    auto radius = [&](int k) {
        double s = static_cast<double>(k) / kScan;
        if (!ascending) s = 1.0 - s;
        return r_lo * std::exp(lratio * s);
    };
    double prev_r = radius(0);
    double prev_v = f(prev_r) - level;
    for (int k = 1; k <= kScan; ++k) {
        double r = radius(k);
        double v = f(r) - level;
        if ((prev_v <= 0.0) != (v <= 0.0)) {
            double a = prev_r, b = r;
            double fa = prev_v;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (a + b);
                double fm = f(mid) - level;
                if ((fa <= 0.0) == (fm <= 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        prev_r = r;
        prev_v = v;
    }
    return -1.0;
}

LevelCurve trace_component(const std::function<double(Complex)>& graph, Complex center,
                           double r_lo, double r_hi, double level, bool ascending,
                           int resolution) {
    LevelCurve curve;
    for (int j = 0; j < resolution; ++j) {
        double theta = kTwoPi * j / resolution;
        Complex dir = std::polar(1.0, theta);
        auto f = [&](double r) { return graph(center + r * dir); };
        double r = radial_crossing(f, r_lo, r_hi, level, ascending);
        if (r < 0.0)
            throw NumericFailureError("level_curves: lost the level set along a ray", level);
        curve.points.push_back(center + r * dir);
    }
    turning_statistics(curve.points, curve.total_turning, curve.negative_turning);
    curve.convex = curve.negative_turning < 1e-3 * curve.total_turning;
    return curve;
}

}  // namespace

std::vector<LevelCurve> level_curves(const GluingConfiguration& cfg, GraphSide side,
                                     double height, int resolution) {
    require_sizes(cfg);
    if (resolution < 16) throw DegenerateInputError("level_curves: resolution too small");
    for (double crit : critical_heights(cfg, side))
        if (std::abs(height - crit) < 1e-9)
            throw CriticalLevelError("level_curves: height is a critical value");

    // Geometric height: the plus sheet is the graph of u^+, the minus sheet
    // lies below the base surface with height -u^-.
    double level = side == GraphSide::Plus ? height : -height;
    auto graph = [&](Complex z) { return limit_graph(cfg, side, z); };
    const std::vector<Complex>& p = side == GraphSide::Plus ? cfg.p_plus : cfg.p_minus;

    double min_sep = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < p.size(); ++i) {
        for (size_t j = i + 1; j < p.size(); ++j)
            min_sep = std::min(min_sep, std::abs(p[i] - p[j]));
        if (side == GraphSide::Minus) min_sep = std::min(min_sep, std::abs(p[i]));
    }

    std::vector<LevelCurve> curves;
    if (level < 0.0) {
        // One loop around each logarithm well at p_i.
        for (const Complex& pi : p)
            curves.push_back(
                trace_component(graph, pi, 1e-11, 0.45 * min_sep, level, true, resolution));
    } else if (side == GraphSide::Plus) {
        // A single outer curve around everything.
        double big = 10.0 * std::exp(level / std::max(1e-6, cfg.gamma[0].real() * cfg.m));
        curves.push_back(trace_component(graph, Complex(0.0), 1e-3, big, level, false,
                                         resolution));
    } else {
        // Two nested curves around the -log|z| well at the origin.
        double rc = std::pow(static_cast<double>(cfg.m - 1), 1.0 / cfg.m);
        double inner_lo = 1e-6 * std::exp(-level);
        curves.push_back(
            trace_component(graph, Complex(0.0), inner_lo, rc, level, true, resolution));
        double big = 10.0 * std::exp(level * (cfg.m - 1));
        curves.push_back(
            trace_component(graph, Complex(0.0), rc, big, level, false, resolution));
    }

    std::sort(curves.begin(), curves.end(), [](const LevelCurve& a, const LevelCurve& b) {
        auto leftmost = [](const LevelCurve& c) {
            double x = std::numeric_limits<double>::infinity();
            double y = std::numeric_limits<double>::infinity();
            for (const auto& pt : c.points)
                if (pt.real() < x || (pt.real() == x && pt.imag() < y)) {
                    x = pt.real();
                    y = pt.imag();
                }
            return std::pair(x, y);
        };
        return leftmost(a) < leftmost(b);
    });
    return curves;
}

std::vector<double> growth_vector(const GluingConfiguration& cfg) {
    GluedComponents parts = build_components(cfg);
    std::vector<double> out;
    // Finite punctures of the base (catenoid: the bottom end at 0).
    out.push_back(-residue_at(parts.phi3_sigma, Complex(0.0)).real());
    out.push_back(-residue_at_infinity(parts.phi3_minus).real());
    out.push_back(-residue_at_infinity(parts.phi3_plus).real());
    return out;
}

}  // namespace necklace

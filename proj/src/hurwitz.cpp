#include "necklace/hurwitz.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace necklace {

namespace {

double arg_2pi(Complex z) {
    double a = std::arg(z);
    if (a < 0) a += 2.0 * std::numbers::pi;
    return a;
}

// Exact multiset matching within tol: backtracking over candidate pairs
// (sizes here are at most the polynomial degree, so this is cheap).
bool match_rec(const std::vector<Complex>& A, const std::vector<Complex>& B,
               std::vector<bool>& used, size_t i, double tol) {
    if (i == A.size()) return true;
    for (size_t j = 0; j < B.size(); ++j) {
        if (used[j] || std::abs(A[i] - B[j]) > tol) continue;
        used[j] = true;
        if (match_rec(A, B, used, i + 1, tol)) return true;
        used[j] = false;
    }
    return false;
}

bool match_within(const std::vector<Complex>& A, const std::vector<Complex>& B,
                  double tol) {
    if (A.size() != B.size()) return false;
    std::vector<bool> used(B.size(), false);
    return match_rec(A, B, used, 0, tol);
}

}  // namespace

Polynomial CoveringLocalModel::polynomial() const {
    if (k < 2 || static_cast<int>(a.size()) != k - 1)
        throw DegenerateInputError("local model needs k >= 2 and k-1 parameters");
    std::vector<Complex> c(k + 1, Complex(0.0));
    c[0] = q;
    for (int j = 0; j <= k - 2; ++j) c[j] += a[j];
    c[k] = Complex(1.0);
    return Polynomial(c);
}

double CoveringLocalModel::cover_radius() const {
    double s = std::abs(q);
    return s > 0 ? 0.25 * s : 0.25;
}

bool CoveringLocalModel::admissible() const {
    BranchingProfile p = branching_profile(polynomial());
    double r = cover_radius();
    for (Complex v : p.critical_values)
        if (std::abs(v - q) > r) return false;
    return true;
}

Complex CoveringLocalModel::marking_point() const {
    return marking_point(cover_radius());
}

Complex CoveringLocalModel::marking_point(double eps) const {
    if (eps <= 0) throw DegenerateInputError("marking needs eps > 0");
    Polynomial h = polynomial();
    Polynomial shifted = h - Polynomial::constant(q + eps);
    RootSet sols = poly_roots(shifted);
    Complex target = std::pow(Complex(eps), 1.0 / k);
    Complex best;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const RootEntry& r : sols.roots) {
        double d = std::abs(r.location - target);
        bool closer = d < best_dist - 1e-9;
        bool tied = std::abs(d - best_dist) <= 1e-9 &&
                    arg_2pi(r.location) < arg_2pi(best);
        if (closer || tied) {
            best = r.location;
            best_dist = d;
        }
    }
    return best;
}

BranchingProfile branching_profile(const Polynomial& h) {
    if (h.degree() < 2)
        throw DegenerateInputError("branching profile needs degree >= 2");
    BranchingProfile p;
    p.critical_points = poly_roots(h.derivative());
    for (const RootEntry& r : p.critical_points.roots) {
        Complex value = h(r.location);
        for (int rep = 0; rep < r.multiplicity; ++rep)
            p.critical_values.push_back(value);
    }
    return p;
}

bool same_branching_values(const Polynomial& h1, const Polynomial& h2,
                           double tol) {
    if (h1.degree() != h2.degree())
        throw DegenerateInputError("same_branching_values needs equal degrees");
    return match_within(branching_profile(h1).critical_values,
                        branching_profile(h2).critical_values, tol);
}

bool isomorphic_profiles(const Polynomial& h1, const Polynomial& h2,
                         double tol) {
    if (h1.degree() != h2.degree())
        throw DegenerateInputError("isomorphic_profiles needs equal degrees");
    BranchingProfile p1 = branching_profile(h1);
    BranchingProfile p2 = branching_profile(h2);
    // Group values by branching order (= multiplicity of the h' root) and
    // require a matching within each order class.
    int max_order = 0;
    for (const RootEntry& r : p1.critical_points.roots)
        max_order = std::max(max_order, r.multiplicity);
    for (const RootEntry& r : p2.critical_points.roots)
        max_order = std::max(max_order, r.multiplicity);
    for (int order = 1; order <= max_order; ++order) {
        std::vector<Complex> v1, v2;
        for (const RootEntry& r : p1.critical_points.roots)
            if (r.multiplicity == order) v1.push_back(h1(r.location));
        for (const RootEntry& r : p2.critical_points.roots)
            if (r.multiplicity == order) v2.push_back(h2(r.location));
        if (!match_within(v1, v2, tol)) return false;
    }
    return true;
}

bool marked_equal(const CoveringLocalModel& m1, const CoveringLocalModel& m2,
                  double tol) {
    if (m1.k != m2.k || std::abs(m1.q - m2.q) > tol)
        throw DegenerateInputError("marked_equal needs matching (k, q)");
    for (int j = 0; j <= m1.k - 2; ++j)
        if (std::abs(m1.a[j] - m2.a[j]) > tol) return false;
    return true;
}

bool symmetric_slice_check(const std::vector<CoveringLocalModel>& models,
                           const std::vector<int>& sigma_action) {
    const int r = static_cast<int>(models.size());
    if (static_cast<int>(sigma_action.size()) != r)
        throw InvalidActionError("action size mismatch");
    for (int i = 0; i < r; ++i) {
        int s = sigma_action[i];
        if (s < 0 || s >= r || sigma_action[s] != i)
            throw InvalidActionError("action is not an involution");
        if (models[s].k != models[i].k)
            throw InvalidActionError("local degrees differ under the action");
    }
    for (int i = 0; i < r; ++i) {
        const CoveringLocalModel& mi = models[i];
        const CoveringLocalModel& ms = models[sigma_action[i]];
        for (int j = 0; j <= mi.k - 2; ++j)
            if (std::abs(ms.a[j] - std::conj(mi.a[j])) > 1e-12) return false;
    }
    return true;
}

std::vector<Complex> symmetric_functions_of_branching(
    const CoveringLocalModel& model) {
    BranchingProfile p = branching_profile(model.polynomial());
    // e_1 .. e_{k-1} via the product prod (x + v_i): coefficient recurrence.
    std::vector<Complex> e(p.critical_values.size() + 1, Complex(0.0));
    e[0] = Complex(1.0);
    size_t filled = 0;
    for (Complex v : p.critical_values) {
        ++filled;
        for (size_t i = filled; i >= 1; --i) e[i] += v * e[i - 1];
    }
    return std::vector<Complex>(e.begin() + 1, e.end());
}

PolynomialityCheck verify_polynomial_dependence(const CoveringLocalModel& base,
                                                int j, int samples) {
    if (j < 0 || j > base.k - 2)
        throw DegenerateInputError("parameter index out of range");
    const int k = base.k;
    const int fit_degree = k * (k - 1);
    if (samples <= fit_degree)
        throw DegenerateInputError("not enough samples for the fit degree");

    // Sample a_j on a circle around its base value (distinct, well
    // conditioned nodes for the Vandermonde fit).
    const double radius = 0.05 * std::max(1.0, std::abs(base.q));
    std::vector<Complex> nodes(samples);
    std::vector<std::vector<Complex>> values(samples);
    for (int s = 0; s < samples; ++s) {
        double th = 2.0 * std::numbers::pi * s / samples;
        Complex da = radius * Complex(std::cos(th), std::sin(th));
        CoveringLocalModel m = base;
        m.a[j] += da;
        nodes[s] = da;
        values[s] = symmetric_functions_of_branching(m);
    }

    Eigen::MatrixXcd V(samples, fit_degree + 1);
    for (int s = 0; s < samples; ++s) {
        Complex p(1.0);
        for (int d = 0; d <= fit_degree; ++d) {
            V(s, d) = p;
            p *= nodes[s];
        }
    }
    auto solver = V.colPivHouseholderQr();

    PolynomialityCheck out;
    out.pass = true;
    for (int fn = 0; fn < k - 1; ++fn) {
        Eigen::VectorXcd y(samples);
        for (int s = 0; s < samples; ++s) y(s) = values[s][fn];
        Eigen::VectorXcd coeff = solver.solve(y);
        double resid = (V * coeff - y).cwiseAbs().maxCoeff();
        out.max_fit_residual = std::max(out.max_fit_residual, resid);
    }
    out.pass = out.max_fit_residual <= 1e-8;
    return out;
}

}  // namespace necklace

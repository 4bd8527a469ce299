#include "necklace/forms.hpp"

#include <cmath>
#include <numbers>

namespace necklace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double distance_point_segment(Complex a, Complex b, Complex p) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double distance_point_arc(const ArcPath& arc, Complex p) {
    Complex d = p - arc.center;
    double ang = std::arg(d);
    double lo = std::min(arc.angle_from, arc.angle_to);
    double hi = std::max(arc.angle_from, arc.angle_to);
    // Is the angular position of p inside the swept sector (mod 2pi)?
    for (double a = ang - 4.0 * kTwoPi; a <= hi + kTwoPi; a += kTwoPi) {
        if (a >= lo && a <= hi) return std::abs(std::abs(d) - arc.radius);
    }
    Complex e0 = arc.center + arc.radius * std::polar(1.0, arc.angle_from);
    Complex e1 = arc.center + arc.radius * std::polar(1.0, arc.angle_to);
    return std::min(std::abs(p - e0), std::abs(p - e1));
}

// Adaptive Simpson over a parameter interval for a complex integrand.
Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b,
                         Complex fa, Complex fm, Complex fb, Complex whole, double tol,
                         int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    Complex flm = f(lm), frm = f(rm);
    Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    Complex s2 = left + right;
    if (depth <= 0 || std::abs(s2 - whole) <= 15.0 * tol) {
        return s2 + (s2 - whole) / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

Complex integrate_param(const std::function<Complex(double)>& f, double a, double b,
                        double tol) {
    Complex fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, kQuadratureMaxDepth);
}

Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                          double tol) {
    Complex d = b - a;
    auto g = [&](double t) { return f(a + t * d) * d; };
    return integrate_param(g, 0.0, 1.0, tol);
}

Complex integrate_arc(const std::function<Complex(Complex)>& f, Complex center, double r,
                      double a0, double a1, double tol) {
    auto g = [&](double t) {
        Complex e = std::polar(r, t);
        Complex z = center + e;
        return f(z) * Complex(0.0, 1.0) * e;
    };
    return integrate_param(g, a0, a1, tol);
}

}  // namespace

double path_distance_to(const PathSpec& path, Complex point) {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CirclePath>) {
                return std::abs(std::abs(point - p.center) - p.radius);
            } else if constexpr (std::is_same_v<T, SegmentPath>) {
                return distance_point_segment(p.from, p.to, point);
            } else if constexpr (std::is_same_v<T, PolylinePath>) {
                double d = std::numeric_limits<double>::infinity();
                for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
                    d = std::min(d,
                                 distance_point_segment(p.vertices[i], p.vertices[i + 1], point));
                return d;
            } else {
                return distance_point_arc(p, point);
            }
        },
        path);
}

const RootSet& MeromorphicForm::finite_poles() const {
    if (!poles_) poles_ = density_.poles();
    return *poles_;
}

Complex residue_at(const MeromorphicForm& w, Complex point) {
    // Local expansion only: shift the denominator to the point and read the
    // pole order off its leading coefficients.  An order decision in the
    // ambiguity zone (e.g. a near-pole just off the point, or two nearly
    // coincident poles straddling it) is refused.
    int k = local_pole_order(w.density().denominator().taylor_shift(point), 1e-11, 1e-7);
    if (k == 0) return Complex(0.0);
    int bound = w.density().denominator().degree();
    auto c = laurent_coefficients(w.density(), point, bound, bound);
    // residue = coefficient of (z - point)^{-1}
    return c[bound - 1];
}

Complex residue_at_infinity(const MeromorphicForm& w) {
    const Polynomial& n = w.density().numerator();
    const Polynomial& d = w.density().denominator();
    if (n.is_zero()) return Complex(0.0);
    int dn = n.degree(), dd = d.degree();
    std::vector<Complex> rn(n.coefficients().rbegin(), n.coefficients().rend());
    std::vector<Complex> rd(d.coefficients().rbegin(), d.coefficients().rend());
    Polynomial num(rn), den(rd);
    int e = dd - dn - 2;
    if (e > 0) {
        std::vector<Complex> shift(e + 1, Complex(0.0));
        shift[e] = Complex(1.0);
        num = num * Polynomial(shift);
    } else if (e < 0) {
        std::vector<Complex> shift(-e + 1, Complex(0.0));
        shift[-e] = Complex(1.0);
        den = den * Polynomial(shift);
    }
    MeromorphicForm transformed{RationalFunction(std::move(num), std::move(den), false)};
    return -residue_at(transformed, Complex(0.0));
}

Complex circle_period(const MeromorphicForm& w, const CirclePath& circle,
                      double pole_margin) {
    const RootSet& ps = w.finite_poles();
    for (const auto& p : ps.roots) {
        double d = std::abs(std::abs(p.location - circle.center) - circle.radius);
        if (d < pole_margin)
            throw PathThroughPoleError("circle_period: pole on or near the circle");
    }
    Complex sum(0.0);
    for (const auto& p : ps.roots)
        if (std::abs(p.location - circle.center) < circle.radius)
            sum += residue_at(w, p.location);
    return Complex(0.0, kTwoPi) * sum * static_cast<double>(circle.orientation);
}

Complex integrate_function(const std::function<Complex(Complex)>& f, const PathSpec& path,
                           double tol) {
    return std::visit(
        [&](const auto& p) -> Complex {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CirclePath>) {
                double a0 = 0.0;
                double a1 = p.orientation >= 0 ? kTwoPi : -kTwoPi;
                return integrate_arc(f, p.center, p.radius, a0, a1, tol);
            } else if constexpr (std::is_same_v<T, SegmentPath>) {
                return integrate_segment(f, p.from, p.to, tol);
            } else if constexpr (std::is_same_v<T, PolylinePath>) {
                Complex acc(0.0);
                for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
                    acc += integrate_segment(f, p.vertices[i], p.vertices[i + 1], tol);
                return acc;
            } else {
                return integrate_arc(f, p.center, p.radius, p.angle_from, p.angle_to, tol);
            }
        },
        path);
}

Complex path_integral(const MeromorphicForm& w, const PathSpec& path, double pole_margin,
                      double tol) {
    for (const auto& p : w.finite_poles().roots)
        if (path_distance_to(path, p.location) < pole_margin)
            throw PathThroughPoleError("path_integral: path passes within pole_margin of a pole");
    auto f = [&](Complex z) { return w.density()(z); };
    return integrate_function(f, path, tol);
}

double vertical_flux(const MeromorphicForm& w_phi3, const CirclePath& cycle,
                     double pole_margin) {
    return circle_period(w_phi3, cycle, pole_margin).imag();
}

}  // namespace necklace

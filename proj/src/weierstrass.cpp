#include "necklace/weierstrass.hpp"

#include <cmath>
#include <numbers>

namespace necklace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    while (a > std::numbers::pi) a -= kTwoPi;
    while (a <= -std::numbers::pi) a += kTwoPi;
    return a;
}

double min_distance_to_punctures(const WeierstrassData& data, const PathSpec& path) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& q : data.punctures)
        if (!q.infinite) d = std::min(d, path_distance_to(path, q.z));
    return d;
}

std::array<double, 3> immerse_forms(const MeromorphicForm& phi1, const MeromorphicForm& phi2,
                                    const MeromorphicForm& phi3, const PathSpec& path) {
    return {path_integral(phi1, path).real(), path_integral(phi2, path).real(),
            path_integral(phi3, path).real()};
}

// Order of the pole of f(z)dz at infinity (negative for a zero).
int pole_order_at_infinity(const RationalFunction& f) {
    if (f.is_zero()) return std::numeric_limits<int>::min();
    return f.numerator().degree() - f.denominator().degree() + 2;
}

}  // namespace

WeierstrassData catenoid() {
    WeierstrassData data;
    data.gauss_map = RationalFunction(Polynomial::identity(), Polynomial::constant(1.0), false);
    data.height_differential =
        MeromorphicForm(RationalFunction(Polynomial({1.0}), Polynomial::identity(), false));
    data.punctures = {SpherePoint::at(Complex(0.0)), SpherePoint::infinity()};
    data.base_point = Complex(1.0);
    return data;
}

std::pair<MeromorphicForm, MeromorphicForm> phi12_from(const RationalFunction& g,
                                                       const MeromorphicForm& phi3) {
    if (g.is_zero()) throw DegenerateInputError("phi12_from: Gauss map identically zero");
    const Polynomial& n = g.numerator();
    const Polynomial& d = g.denominator();
    const RationalFunction& f3 = phi3.density();
    // g^{-1} - g = (d^2 - n^2)/(nd), g^{-1} + g = (d^2 + n^2)/(nd)
    Polynomial nd = n * d;
    Polynomial num1 = (d * d - n * n) * f3.numerator();
    Polynomial num2 = (d * d + n * n) * f3.numerator();
    Polynomial den = nd * f3.denominator();
    RationalFunction f1 = rational_reduce(num1 * Complex(0.5), den);
    RationalFunction f2 = rational_reduce(num2 * Complex(0.0, 0.5), den);
    return {MeromorphicForm(std::move(f1)), MeromorphicForm(std::move(f2))};
}

CompatibilityReport compatibility_report(const WeierstrassData& data) {
    CompatibilityReport report;
    auto complain = [&](std::string msg) {
        report.pass = false;
        report.issues.push_back(std::move(msg));
    };

    const RationalFunction& g = data.gauss_map;
    const MeromorphicForm& phi3 = data.height_differential;
    double tol = 1e-8;

    // phi3: simple pole at every puncture, no others.
    const RootSet& poles = phi3.finite_poles();
    size_t matched = 0;
    for (const auto& p : poles.roots) {
        bool found = false;
        for (const auto& q : data.punctures)
            if (!q.infinite && std::abs(q.z - p.location) < tol) found = true;
        if (!found)
            complain("height differential has a pole away from the punctures");
        else if (p.multiplicity != 1)
            complain("height differential pole is not simple");
        else
            ++matched;
    }
    size_t finite_punctures = 0;
    bool infinite_puncture = false;
    for (const auto& q : data.punctures) {
        if (q.infinite)
            infinite_puncture = true;
        else
            ++finite_punctures;
    }
    if (matched != finite_punctures)
        complain("some puncture is not a pole of the height differential");
    if (infinite_puncture && pole_order_at_infinity(phi3.density()) != 1)
        complain("height differential pole at infinity is not simple");
    if (!infinite_puncture && pole_order_at_infinity(phi3.density()) >= 1)
        complain("height differential has a pole at infinity but no puncture there");

    // g: simple zero or pole at each puncture, alternating in stored order.
    int previous = 0;  // +1 zero, -1 pole
    for (const auto& q : data.punctures) {
        int kind = 0;
        if (q.infinite) {
            int diff = g.numerator().degree() - g.denominator().degree();
            if (diff == 1) kind = -1;
            if (diff == -1) kind = +1;
        } else {
            if (std::abs(g.numerator()(q.z)) < tol) kind = +1;
            if (std::abs(g.denominator()(q.z)) < tol) kind = -1;
        }
        if (kind == 0)
            complain("Gauss map is neither 0 nor infinity at a puncture");
        else if (kind == previous)
            complain("Gauss map values at punctures do not alternate");
        previous = kind;
    }

    // Every finite zero of phi3 must meet a zero or pole of g.
    if (!phi3.density().is_zero() && phi3.density().numerator().degree() > 0) {
        for (const auto& z : phi3.density().zeros().roots) {
            double gn = std::abs(g.numerator()(z.location));
            double gd = std::abs(g.denominator()(z.location));
            if (gn > tol && gd > tol)
                complain("zero of the height differential not compensated by the Gauss map");
        }
    }
    return report;
}

std::vector<Complex> period_obstructions(const WeierstrassData& data, double tol) {
    auto [phi1, phi2] = phi12_from(data.gauss_map, data.height_differential);
    std::vector<Complex> bad;
    for (const auto& q : data.punctures) {
        if (q.infinite) continue;
        Complex r1 = residue_at(phi1, q.z);
        Complex r2 = residue_at(phi2, q.z);
        if (std::abs(r1.imag()) > tol || std::abs(r2.imag()) > tol) bad.push_back(q.z);
    }
    return bad;
}

PathSpec default_immersion_path(const WeierstrassData& data, Complex z) {
    SegmentPath direct{data.base_point, z};
    if (min_distance_to_punctures(data, direct) >= kDefaultPoleMargin) return direct;

    // Detour: arc at the base radius around the origin, then radial leg.
    double rb = std::abs(data.base_point);
    double ab = std::arg(data.base_point);
    double az = std::arg(z);
    double sweep = wrap_angle(az - ab);
    PolylinePath detour;
    detour.vertices.push_back(data.base_point);
    const int kArcSamples = 64;
    for (int i = 1; i <= kArcSamples; ++i)
        detour.vertices.push_back(
            std::polar(rb, ab + sweep * static_cast<double>(i) / kArcSamples));
    detour.vertices.push_back(z);
    if (min_distance_to_punctures(data, detour) >= kDefaultPoleMargin) return detour;
    throw PathThroughPoleError(
        "default_immersion_path: no deterministic path clears the punctures");
}

std::array<double, 3> immerse(const WeierstrassData& data, Complex z) {
    return immerse(data, z, default_immersion_path(data, z));
}

std::array<double, 3> immerse(const WeierstrassData& data, Complex z, const PathSpec& path) {
    (void)z;
    auto [phi1, phi2] = phi12_from(data.gauss_map, data.height_differential);
    auto x = immerse_forms(phi1, phi2, data.height_differential, path);
    return {data.scale * x[0], data.scale * x[1], data.scale * x[2]};
}

double gauss_curvature(const WeierstrassData& data, Complex z) {
    const RationalFunction& g = data.gauss_map;
    if (g.numerator().degree() == 0 && g.denominator().degree() == 0) return 0.0;
    double a = std::abs(g(z));
    double f3 = std::abs(data.height_differential.density()(z));
    if (!(a > 0.0) || !std::isfinite(a) || !(f3 > 0.0) || !std::isfinite(f3))
        throw SingularPointError("gauss_curvature: conformal factor degenerates here");
    // g'/g = n'/n - d'/d
    Complex logder = g.numerator().derivative()(z) / g.numerator()(z) -
                     g.denominator().derivative()(z) / g.denominator()(z);
    double lambda = 0.5 * (a + 1.0 / a) * f3 * data.scale;
    double k = 2.0 * std::abs(logder) / ((a + 1.0 / a) * lambda);
    return -k * k;
}

namespace {

void enumerate_grid(const GridSpec& grid, std::vector<Complex>& points,
                    std::vector<std::array<int, 3>>& faces) {
    if (const auto* ann = std::get_if<AnnularGrid>(&grid)) {
        if (ann->nr < 2 || ann->ntheta < 3 || ann->r0 <= 0.0 || ann->r1 <= ann->r0)
            throw DegenerateInputError("annular grid needs nr >= 2, ntheta >= 3, 0 < r0 < r1");
        double ratio = ann->r1 / ann->r0;
        for (int i = 0; i < ann->nr; ++i) {
            double r = ann->r0 * std::pow(ratio, static_cast<double>(i) / (ann->nr - 1));
            for (int j = 0; j < ann->ntheta; ++j)
                points.push_back(ann->center + std::polar(r, kTwoPi * j / ann->ntheta));
        }
        for (int i = 0; i + 1 < ann->nr; ++i)
            for (int j = 0; j < ann->ntheta; ++j) {
                int jn = (j + 1) % ann->ntheta;
                int v00 = i * ann->ntheta + j, v01 = i * ann->ntheta + jn;
                int v10 = (i + 1) * ann->ntheta + j, v11 = (i + 1) * ann->ntheta + jn;
                faces.push_back({v00, v10, v11});
                faces.push_back({v00, v11, v01});
            }
    } else {
        const auto& rect = std::get<RectangularGrid>(grid);
        if (rect.nx < 2 || rect.ny < 2)
            throw DegenerateInputError("rectangular grid needs nx, ny >= 2");
        double x0 = rect.corner0.real(), y0 = rect.corner0.imag();
        double x1 = rect.corner1.real(), y1 = rect.corner1.imag();
        for (int i = 0; i < rect.ny; ++i)
            for (int j = 0; j < rect.nx; ++j)
                points.push_back(Complex(x0 + (x1 - x0) * j / (rect.nx - 1),
                                         y0 + (y1 - y0) * i / (rect.ny - 1)));
        for (int i = 0; i + 1 < rect.ny; ++i)
            for (int j = 0; j + 1 < rect.nx; ++j) {
                int v00 = i * rect.nx + j, v01 = v00 + 1;
                int v10 = v00 + rect.nx, v11 = v10 + 1;
                faces.push_back({v00, v10, v11});
                faces.push_back({v00, v11, v01});
            }
    }
}

}  // namespace

SurfaceMesh mesh_surface(const WeierstrassData& data, const GridSpec& grid) {
    std::vector<Complex> points;
    SurfaceMesh mesh;
    enumerate_grid(grid, points, mesh.faces);
    auto [phi1, phi2] = phi12_from(data.gauss_map, data.height_differential);
    for (Complex z : points) {
        PathSpec path = default_immersion_path(data, z);
        auto x = immerse_forms(phi1, phi2, data.height_differential, path);
        mesh.vertices.push_back(
            {data.scale * x[0], data.scale * x[1], data.scale * x[2]});
        mesh.height.push_back(data.scale * x[2]);
        mesh.gauss_curvature.push_back(gauss_curvature(data, z));
    }
    return mesh;
}

SurfaceMesh mesh_graph(const std::function<double(Complex)>& f, const GridSpec& grid) {
    std::vector<Complex> points;
    SurfaceMesh mesh;
    enumerate_grid(grid, points, mesh.faces);
    for (Complex z : points) {
        double h = f(z);
        mesh.vertices.push_back({z.real(), z.imag(), h});
        mesh.height.push_back(h);
        mesh.gauss_curvature.push_back(0.0);
    }
    return mesh;
}

DimensionAudit dimension_audit(int genus, int ends) {
    if (genus < 0 || ends < 2)
        throw DegenerateInputError("dimension_audit: need genus >= 0 and ends >= 2");
    return {5 * genus + 3 * ends - 5, 5 * genus + 2 * ends - 4, ends - 1};
}

}  // namespace necklace

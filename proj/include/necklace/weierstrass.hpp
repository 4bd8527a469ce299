#ifndef NECKLACE_WEIERSTRASS_HPP
#define NECKLACE_WEIERSTRASS_HPP

#include <array>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "necklace/forms.hpp"

namespace necklace {

/// A point on the Riemann sphere.
struct SpherePoint {
    Complex z;
    bool infinite = false;

    static SpherePoint at(Complex location) { return {location, false}; }
    static SpherePoint infinity() { return {Complex(0.0), true}; }
};

/// Genus-0 Weierstrass data (g, phi3) with punctures q_1,...,q_n and a base
/// point for the immersion integral.  Normalized units: the top logarithmic
/// growth is 1; `scale` converts to user units.
struct WeierstrassData {
    RationalFunction gauss_map;
    MeromorphicForm height_differential;
    std::vector<SpherePoint> punctures;
    Complex base_point = Complex(1.0);
    double scale = 1.0;
};

/// The standard catenoid: g = z, phi3 = dz/z, punctures {0, infinity},
/// base point 1 (on the unit waist).
WeierstrassData catenoid();

/// phi1 = (1/2)(g^{-1} - g) phi3, phi2 = (i/2)(g^{-1} + g) phi3.
std::pair<MeromorphicForm, MeromorphicForm> phi12_from(const RationalFunction& g,
                                                       const MeromorphicForm& phi3);

struct CompatibilityReport {
    bool pass = true;
    std::vector<std::string> issues;
};

/// Checks the structural invariants of WeierstrassData: phi3 has a simple
/// pole at every puncture and no others; g takes 0 or infinity simply and
/// alternately at the punctures; every zero of phi3 is matched by a zero or
/// pole of g (regular induced metric).
CompatibilityReport compatibility_report(const WeierstrassData& data);

/// Punctures where the residue of phi1 or phi2 is not real (horizontal
/// period obstruction); empty when the period conditions hold.
std::vector<Complex> period_obstructions(const WeierstrassData& data, double tol = 1e-9);

/// Deterministic pole-avoiding path from the base point to z: the straight
/// segment if it clears every puncture by kDefaultPoleMargin, else an
/// arc-then-radial detour around the origin.
PathSpec default_immersion_path(const WeierstrassData& data, Complex z);

/// The immersion z -> Re int_{base}^{z} (phi1, phi2, phi3).
std::array<double, 3> immerse(const WeierstrassData& data, Complex z);
std::array<double, 3> immerse(const WeierstrassData& data, Complex z, const PathSpec& path);

/// Gauss curvature K = -(4|g'/g| / ((|g|+1/|g|)^2 |phi3 density|))^2 <= 0.
double gauss_curvature(const WeierstrassData& data, Complex z);

/// Annular sampling r0 <= |z - center| <= r1, logarithmic radial spacing,
/// ntheta samples around the full circle (wrapped faces).
struct AnnularGrid {
    double r0 = 0.5;
    double r1 = 2.0;
    int nr = 32;
    int ntheta = 32;
    Complex center = Complex(0.0);
};

/// Rectangular sampling of the axis-aligned box [corner0, corner1], nx-by-ny
/// vertices (each >= 2).
struct RectangularGrid {
    Complex corner0;
    Complex corner1;
    int nx = 2;
    int ny = 2;
};

using GridSpec = std::variant<AnnularGrid, RectangularGrid>;

struct SurfaceMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 3>> faces;
    std::vector<double> gauss_curvature;  // per-vertex
    std::vector<double> height;           // per-vertex x3
};

/// Vertices = immerse at grid points (deterministic row-major order),
/// curvature and height channels filled per vertex.
SurfaceMesh mesh_surface(const WeierstrassData& data, const GridSpec& grid);

/// Mesh of a scalar graph z -> (Re z, Im z, f(z)) over the grid.
SurfaceMesh mesh_graph(const std::function<double(Complex)>& f, const GridSpec& grid);

/// Parameter/equation bookkeeping for genus G with n ends:
/// (5G+3n-5 parameters, 5G+2n-4 real equations, expected kernel n-1).
struct DimensionAudit {
    int parameters;
    int equations;
    int expected_kernel;
};

DimensionAudit dimension_audit(int genus, int ends);

}  // namespace necklace

#endif

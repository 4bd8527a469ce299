#ifndef NECKLACE_GLUING_HPP
#define NECKLACE_GLUING_HPP

#include <string>
#include <vector>

#include "necklace/weierstrass.hpp"

namespace necklace {

/// All parameters of one necklace gluing step: m necks between the base
/// surface's top end and the two extra spheres (minus sphere carrying the
/// old top end, plus sphere carrying the new one).
struct GluingConfiguration {
    int m = 2;
    double t = 0.0;
    double epsilon = 0.1;                // node-disk radius
    std::vector<Complex> beta_minus;     // beta_0^-, ..., beta_m^-  (m+1 entries)
    std::vector<Complex> beta_plus;      // beta_1^+, ..., beta_m^+  (m entries)
    std::vector<Complex> p_minus;        // m node points on the minus sphere
    std::vector<Complex> p_plus;         // m node points on the plus sphere
    std::vector<Complex> gamma;          // m neck residues
    std::vector<double> c;               // c_1, ..., c_{n-1} base growths
    std::vector<Complex> alpha;          // base A-periods (empty, genus 0)
    WeierstrassData base;                // the surface being extended
};

/// Central values: beta_0^- = -1, beta_i^+/- = gamma_i = 1/(m-1),
/// p_i^+ = omega^{-i}, p_i^- = omega^i with omega = exp(2*pi*i/m),
/// catenoid base with c = (-1) and top growth normalized to 1.
GluingConfiguration central_configuration(int m);

struct SigmaSymmetryReport {
    bool pass = true;
    std::vector<std::string> issues;
};

/// Mirror-symmetry slice check: index-reversal conjugation on gamma, beta,
/// p (entry m-i conjugate to entry i, entry m real, beta_0^- real) and
/// real base growths.
SigmaSymmetryReport check_sigma_symmetry(const GluingConfiguration& cfg, double tol = 1e-12);

/// The t = 0 restriction of the glued data to its three components.
struct GluedComponents {
    RationalFunction g_minus;
    RationalFunction g_plus;
    MeromorphicForm phi3_sigma;  // on the base sphere
    MeromorphicForm phi3_minus;  // on the minus sphere
    MeromorphicForm phi3_plus;   // on the plus sphere
};

/// Assemble g^- = beta_0^-/z + sum beta_i^-/(z - p_i^-),
/// g^+ = sum beta_i^+/(z - p_i^+), and the per-component height
/// differentials; node residues match with opposite signs.
GluedComponents build_components(const GluingConfiguration& cfg);

enum class NeckKind {
    TopNode,     // v^- v^+ = t
    CircleNode,  // v^- v^+ = t^2
};

/// Transition map across a node annulus: t/v (top) or t^2/v (circle).
Complex node_transition(Complex v, double t, NeckKind neck, double epsilon = 0.1);

enum class GraphSide { Plus, Minus };

/// The limit graph functions
///   u^+(z) = sum Re(gamma_i) log|z - p_i^+|,
///   u^-(z) = -log|z| + sum Re(gamma_i) log|z - p_i^-|
/// (central values reduce to (1/(m-1)) log|z^m - 1| and its -log|z| shift).
double limit_graph(const GluingConfiguration& cfg, GraphSide side, Complex z);

struct LevelCurve {
    std::vector<Complex> points;  // closed polyline (last connects to first)
    bool convex = false;
    double negative_turning = 0.0;
    double total_turning = 0.0;
};

/// Closed level curves of the limit surface at geometric height x3 = height.
/// The plus sheet is the graph of u^+; the minus sheet lies below with
/// height -u^-.  Components are ordered by leftmost point; `resolution` is
/// the number of ray samples per component.
std::vector<LevelCurve> level_curves(const GluingConfiguration& cfg, GraphSide side,
                                     double height, int resolution = 512);

/// Heights at which the level-set topology changes (geometric convention as
/// in level_curves).
std::vector<double> critical_heights(const GluingConfiguration& cfg, GraphSide side);

/// Logarithmic growths (minus the phi3 residue) at the punctures
/// q_1, ..., q_{n-1}, infinity^-, infinity^+ of the glued limit.
std::vector<double> growth_vector(const GluingConfiguration& cfg);

}  // namespace necklace

#endif

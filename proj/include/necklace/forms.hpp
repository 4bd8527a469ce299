#ifndef NECKLACE_FORMS_HPP
#define NECKLACE_FORMS_HPP

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "necklace/complex_algebra.hpp"

namespace necklace {

struct CirclePath {
    Complex center;
    double radius = 1.0;
    int orientation = +1;  // +1 counterclockwise
};

struct SegmentPath {
    Complex from;
    Complex to;
};

struct PolylinePath {
    std::vector<Complex> vertices;  // >= 2
};

// Circular arc, counterclockwise from angle_from to angle_to when
// angle_to > angle_from (angles in radians, unwrapped).
struct ArcPath {
    Complex center;
    double radius = 1.0;
    double angle_from = 0.0;
    double angle_to = 0.0;
};

using PathSpec = std::variant<CirclePath, SegmentPath, PolylinePath, ArcPath>;

double path_distance_to(const PathSpec& path, Complex point);

/// Default pole-avoidance margin: half the default node-disk radius 0.1.
inline constexpr double kDefaultPoleMargin = 0.05;
inline constexpr double kQuadratureTol = 1e-10;
inline constexpr int kQuadratureMaxDepth = 16;  // cap 2^16 subintervals

/// A meromorphic 1-form f(z) dz on the sphere, f rational.
class MeromorphicForm {
  public:
    MeromorphicForm() = default;
    explicit MeromorphicForm(RationalFunction density) : density_(std::move(density)) {}

    const RationalFunction& density() const { return density_; }

    /// Finite poles of the density with multiplicities.
    const RootSet& finite_poles() const;

    MeromorphicForm operator+(const MeromorphicForm& o) const {
        return MeromorphicForm(density_ + o.density_);
    }
    MeromorphicForm operator*(Complex s) const { return MeromorphicForm(density_ * s); }
    MeromorphicForm operator-() const { return MeromorphicForm(-density_); }

  private:
    RationalFunction density_;
    mutable std::optional<RootSet> poles_;
};

/// Residue at a finite point (0 at regular points).
Complex residue_at(const MeromorphicForm& w, Complex point);

/// Residue at infinity via the chart zeta = 1/z:
/// -Res_0 of (1/zeta^2) density(1/zeta).
Complex residue_at_infinity(const MeromorphicForm& w);

/// 2*pi*i * (sum of residues strictly inside), sign per orientation.
Complex circle_period(const MeromorphicForm& w, const CirclePath& circle,
                      double pole_margin = kDefaultPoleMargin);

/// Adaptive quadrature of the density along the path.
Complex path_integral(const MeromorphicForm& w, const PathSpec& path,
                      double pole_margin = kDefaultPoleMargin,
                      double tol = kQuadratureTol);

/// Quadrature of an arbitrary integrand f(z) dz along the path (no pole checks).
Complex integrate_function(const std::function<Complex(Complex)>& f, const PathSpec& path,
                           double tol = kQuadratureTol);

/// Im of the circle period of phi3 along the cycle.
double vertical_flux(const MeromorphicForm& w_phi3, const CirclePath& cycle,
                     double pole_margin = kDefaultPoleMargin);

}  // namespace necklace

#endif

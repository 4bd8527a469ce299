#ifndef NECKLACE_HURWITZ_HPP
#define NECKLACE_HURWITZ_HPP

#include <vector>

#include "necklace/complex_algebra.hpp"

namespace necklace {

/// Local polynomial model of a branched-covering deformation:
/// h(z) = z^k + q + sum_{j=0}^{k-2} a_j z^j (no z^{k-1} term by convention).
/// q is the central branching value; the a_j are the deformation parameters.
struct CoveringLocalModel {
    int k = 2;
    Complex q;
    std::vector<Complex> a;  // a_0 .. a_{k-2}

    Polynomial polynomial() const;

    /// Radius of the disk around q that must contain every finite critical
    /// value: 0.25 |q|, or the absolute fallback 0.25 when q = 0.
    double cover_radius() const;

    /// True when all finite critical values of h lie in D(q, cover_radius()).
    bool admissible() const;

    /// The marked preimage: the solution of h(z) = q + eps closest to
    /// eps^(1/k), ties broken by smallest argument in [0, 2 pi).
    /// eps defaults to cover_radius().
    Complex marking_point() const;
    Complex marking_point(double eps) const;
};

/// Critical points of h (roots of h') and the multiset of critical values.
/// A critical point where h' vanishes to order mu has local multiplicity
/// e = mu + 1 and contributes its value e - 1 = mu times, so the expanded
/// value list always has k - 1 entries.
struct BranchingProfile {
    RootSet critical_points;
    std::vector<Complex> critical_values;  // expanded, k - 1 entries
};

BranchingProfile branching_profile(const Polynomial& h);

/// Multiset equality of the critical values within tol (optimal matching).
bool same_branching_values(const Polynomial& h1, const Polynomial& h2,
                           double tol);

/// Compares the multisets of (branching order, critical value) pairs -- a
/// necessary condition for covering isomorphism that ignores the marking.
bool isomorphic_profiles(const Polynomial& h1, const Polynomial& h2,
                         double tol = 1e-9);

/// Marked-covering isomorphism inside the local-model chart: parameter
/// vectors equal coordinate-wise within tol.  Requires matching (k, q).
bool marked_equal(const CoveringLocalModel& m1, const CoveringLocalModel& m2,
                  double tol);

/// Checks the symmetric-slice condition a_{sigma(i), j} = conj(a_{i, j})
/// within 1e-12.  sigma must be an involution on indices preserving the
/// local degrees, else InvalidActionError.
bool symmetric_slice_check(const std::vector<CoveringLocalModel>& models,
                           const std::vector<int>& sigma_action);

/// Elementary symmetric functions e_1, ..., e_{k-1} of the critical-value
/// multiset of the model's polynomial.
std::vector<Complex> symmetric_functions_of_branching(
    const CoveringLocalModel& model);

struct PolynomialityCheck {
    bool pass = false;
    double max_fit_residual = 0.0;
};

/// Samples the symmetric functions on a 25-point grid in parameter a_j and
/// fits each with a polynomial of degree <= k(k-1); passes when every fit
/// reproduces the samples to 1e-8.
PolynomialityCheck verify_polynomial_dependence(const CoveringLocalModel& base,
                                                int j, int samples = 25);

}  // namespace necklace

#endif

#ifndef NECKLACE_TOWER_HPP
#define NECKLACE_TOWER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "necklace/errors.hpp"

namespace necklace {

// Growth lists are kept in exact rational arithmetic: every quantity in the
// recursion is a product of integer ratios, so there is no drift even over
// hundreds of iterations.  Convert to double only for reporting.
using Rational = boost::multiprecision::cpp_rational;

struct TowerStep {
    int m = 0;
    Rational curvature_lower_bound;  // (m - 1)^2 / (2 c_n^2)
};

/// Logarithmic growth bookkeeping for a surface with n ends:
/// c_1 < c_2 < ... < c_{n-1} < 0 < c_n.  Note the growths of the base
/// surface need not sum to zero -- this is the end-growth list, not a
/// closed residue system.
struct GrowthState {
    int n = 2;
    std::vector<Rational> growths;
    std::vector<TowerStep> history;

    static GrowthState catenoid();  // n = 2, growths (-1, 1)
};

/// One induction step: open m nodes at the top end.  Requires the
/// embeddedness condition m - 1 > c_n / |c_{n-1}|; on failure throws
/// EmbeddednessConditionError carrying the minimal admissible m.
/// New growth list: (c_1, ..., c_{n-1}, -c_n/(m-1), m c_n/(m-1)).
GrowthState step(const GrowthState& state, int m);

/// Opening-number schedule m_2, m_3, ..., m_N (entry j of m holds m_{j+2}).
struct Schedule {
    std::vector<int> m;

    static Schedule minimal(int N);           // m_n = 2n - 1
    static Schedule geometric(int base, int N);  // m_n = base^n
};

struct ScheduleReport {
    bool valid = false;
    // Paper-style index n of the first offending entry m_n (-1 when valid).
    int violation_index = -1;
    std::string reason;
    GrowthState final_state;  // state after all steps when valid
};

/// Checks the gap condition (m_2 >= 3, m_{k+1} >= m_k + 2), simulates the
/// tower from the catenoid verifying the embeddedness condition at every
/// stage, and confirms m_n >= 2n - 1 throughout.
ScheduleReport validate_schedule(const Schedule& s);

struct SeriesClassification {
    std::string verdict;  // "convergent", "divergent" or "inconclusive"
    std::string test;     // "ratio" or "comparison"
    double tail_ratio = 0.0;  // |a_{n+1}/a_n| at the last computed index
    std::vector<double> partial_sums;  // of |c_n(S_infinity)|
};

struct AsymptoticsReport {
    // Index j holds the value for n = j + 2, n running up to N.
    std::vector<Rational> c_n_of_S_n;    // prod_{i=2}^{n-1} m_i/(m_i - 1)
    std::vector<Rational> c_n_of_S_inf;  // -c_n(S_n)/(m_n - 1)
    std::vector<Rational> curvature_certificates;  // (m_n-1)^2/(2 c_n(S_n)^2)
    double sqrt_ratio_max = 0.0;  // max_n c_n(S_n)/sqrt(n)
    bool sqrt_bound_ok = false;   // sqrt_ratio_max <= kSqrtBoundConstant
    bool certificates_exceed_n_minus_1 = false;
    SeriesClassification series;
};

/// Constant calibrated on the minimal schedule m_n = 2n - 1, which maximizes
/// c_n(S_n) among valid schedules (m/(m-1) decreases in m).
inline constexpr double kSqrtBoundConstant = 1.6;

/// Requires the schedule to be valid and to provide entries m_2 .. m_N.
AsymptoticsReport asymptotics(const Schedule& s, int N);

}  // namespace necklace

#endif

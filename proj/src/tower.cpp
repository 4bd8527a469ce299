#include "necklace/tower.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace necklace {

namespace {

void check_growth_invariant(const GrowthState& s) {
    if (s.n < 2 || static_cast<int>(s.growths.size()) != s.n)
        throw DegenerateInputError("growth state needs n >= 2 growths");
    for (int i = 0; i + 1 < s.n; ++i)
        if (!(s.growths[i] < s.growths[i + 1]))
            throw DegenerateInputError("growths must be strictly increasing");
    if (!(s.growths[s.n - 2] < 0 && s.growths[s.n - 1] > 0))
        throw DegenerateInputError("exactly one growth must be positive");
}

int floor_int(const Rational& r) {
    // r >= 0 in every call site, so truncation equals floor.
    return (boost::multiprecision::numerator(r) /
            boost::multiprecision::denominator(r))
        .convert_to<int>();
}

}  // namespace

GrowthState GrowthState::catenoid() {
    GrowthState s;
    s.n = 2;
    s.growths = {Rational(-1), Rational(1)};
    return s;
}

GrowthState step(const GrowthState& state, int m) {
    check_growth_invariant(state);
    const Rational c_top = state.growths[state.n - 1];
    const Rational c_neg = state.growths[state.n - 2];  // largest negative
    const Rational ratio = c_top / (-c_neg);
    if (!(Rational(m - 1) > ratio)) {
        int min_m = floor_int(ratio) + 2;
        std::ostringstream msg;
        msg << "embeddedness condition m - 1 > c_n/|c_{n-1}| fails for m = "
            << m << "; need m >= " << min_m;
        throw EmbeddednessConditionError(msg.str(), min_m);
    }

    GrowthState next;
    next.n = state.n + 1;
    next.growths.assign(state.growths.begin(), state.growths.end() - 1);
    next.growths.push_back(-c_top / (m - 1));
    next.growths.push_back(Rational(m) * c_top / (m - 1));
    next.history = state.history;
    next.history.push_back(
        {m, Rational(m - 1) * (m - 1) / (2 * c_top * c_top)});
    check_growth_invariant(next);
    return next;
}

Schedule Schedule::minimal(int N) {
    Schedule s;
    for (int n = 2; n <= N; ++n) s.m.push_back(2 * n - 1);
    return s;
}

Schedule Schedule::geometric(int base, int N) {
    Schedule s;
    long long v = base;  // m_n = base^n starting at n = 2
    v *= base;
    for (int n = 2; n <= N; ++n) {
        s.m.push_back(static_cast<int>(v));
        v *= base;
    }
    return s;
}

ScheduleReport validate_schedule(const Schedule& s) {
    ScheduleReport rep;
    rep.final_state = GrowthState::catenoid();

    // Gap condition: m_2 >= 3, m_{k+1} >= m_k + 2.
    for (size_t j = 0; j < s.m.size(); ++j) {
        int n = static_cast<int>(j) + 2;
        if (j == 0 && s.m[j] < 3) {
            rep.violation_index = n;
            rep.reason = "m_2 must be at least 3";
            return rep;
        }
        if (j > 0 && s.m[j] < s.m[j - 1] + 2) {
            std::ostringstream why;
            why << "m_" << n << " = " << s.m[j] << " needs >= "
                << s.m[j - 1] + 2;
            rep.violation_index = n;
            rep.reason = why.str();
            return rep;
        }
        if (s.m[j] < 2 * n - 1) {
            std::ostringstream why;
            why << "m_" << n << " = " << s.m[j] << " below 2n - 1 = "
                << 2 * n - 1;
            rep.violation_index = n;
            rep.reason = why.str();
            return rep;
        }
    }

    // Simulate the tower, re-deriving the embeddedness condition each step.
    GrowthState state = GrowthState::catenoid();
    for (size_t j = 0; j < s.m.size(); ++j) {
        try {
            state = step(state, s.m[j]);
        } catch (const EmbeddednessConditionError& e) {
            rep.violation_index = static_cast<int>(j) + 2;
            rep.reason = e.what();
            return rep;
        }
    }
    rep.valid = true;
    rep.final_state = state;
    return rep;
}

AsymptoticsReport asymptotics(const Schedule& s, int N) {
    if (N < 2) throw DegenerateInputError("asymptotics needs N >= 2");
    if (static_cast<int>(s.m.size()) < N - 1)
        throw DegenerateInputError("schedule too short: need entries up to m_N");
    Schedule prefix;
    prefix.m.assign(s.m.begin(), s.m.begin() + (N - 1));
    ScheduleReport check = validate_schedule(prefix);
    if (!check.valid)
        throw DegenerateInputError("invalid schedule: " + check.reason);

    AsymptoticsReport rep;
    rep.sqrt_bound_ok = true;
    rep.certificates_exceed_n_minus_1 = true;

    Rational c(1);  // c_2(S_2) = 1; thereafter prod_{i=2}^{n-1} m_i/(m_i-1)
    for (int n = 2; n <= N; ++n) {
        if (n > 2) {
            int m_prev = prefix.m[n - 3];  // m_{n-1}
            c *= Rational(m_prev) / (m_prev - 1);
        }
        int m_n = prefix.m[n - 2];
        rep.c_n_of_S_n.push_back(c);
        rep.c_n_of_S_inf.push_back(-c / (m_n - 1));
        Rational cert = Rational(m_n - 1) * (m_n - 1) / (2 * c * c);
        rep.curvature_certificates.push_back(cert);
        if (!(cert > n - 1)) rep.certificates_exceed_n_minus_1 = false;

        double ratio = c.convert_to<double>() / std::sqrt(double(n));
        rep.sqrt_ratio_max = std::max(rep.sqrt_ratio_max, ratio);
    }
    rep.sqrt_bound_ok = rep.sqrt_ratio_max <= kSqrtBoundConstant;

    // Partial sums of |c_n(S_infinity)|.
    double sum = 0.0;
    for (const Rational& a : rep.c_n_of_S_inf) {
        sum += std::abs(a.convert_to<double>());
        rep.series.partial_sums.push_back(sum);
    }

    // Classification.  Term ratio |a_{n+1}/a_n| = m_n / (m_{n+1} - 1) exactly;
    // examine the tail half of the computed range.
    int tail_start = std::max(2, N / 2);
    bool ratio_conclusive = N >= 3;
    Rational last_ratio(0);
    for (int n = tail_start; n <= N - 1; ++n) {
        last_ratio = Rational(prefix.m[n - 2]) / (prefix.m[n - 1] - 1);
        if (last_ratio > Rational(9, 10)) ratio_conclusive = false;
    }
    rep.series.tail_ratio = last_ratio.convert_to<double>();
    if (ratio_conclusive) {
        rep.series.verdict = "convergent";
        rep.series.test = "ratio";
    } else {
        // Comparison with the harmonic series: n |a_n| >= 1 on the tail.
        bool dominates = true;
        for (int n = tail_start; n <= N; ++n)
            if (!(Rational(n) * (-rep.c_n_of_S_inf[n - 2]) >= 1))
                dominates = false;
        if (dominates) {
            rep.series.verdict = "divergent";
            rep.series.test = "comparison";
        } else {
            rep.series.verdict = "inconclusive";
            rep.series.test = "comparison";
        }
    }
    return rep;
}

}  // namespace necklace

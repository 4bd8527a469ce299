#include "necklace/complex_algebra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace necklace {

namespace {

constexpr int kNewtonCap = 500;  // total polishing iterations per poly_roots call

double sort_arg(Complex z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return a;
}

std::vector<Complex> trim(std::vector<Complex> c) {
    while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
    return c;
}

// Truncated power-series quotient a/b mod w^n, requires b[0] != 0.
std::vector<Complex> series_divide(const std::vector<Complex>& a,
                                   const std::vector<Complex>& b, int n) {
    std::vector<Complex> q(n, Complex(0.0));
    for (int i = 0; i < n; ++i) {
        Complex s = i < static_cast<int>(a.size()) ? a[i] : Complex(0.0);
        for (int j = 0; j < i; ++j) {
            int k = i - j;
            if (k < static_cast<int>(b.size())) s -= q[j] * b[k];
        }
        q[i] = s / b[0];
    }
    return q;
}

struct Cluster {
    Complex center;
    int multiplicity;
};

std::vector<Cluster> cluster_points(const std::vector<Complex>& pts, double tol) {
    int n = static_cast<int>(pts.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= tol) parent[find(i)] = find(j);
    std::vector<Cluster> out;
    std::vector<int> root_of(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (root_of[r] < 0) {
            root_of[r] = static_cast<int>(out.size());
            out.push_back({Complex(0.0), 0});
        }
        Cluster& c = out[root_of[r]];
        c.center += pts[i];
        c.multiplicity += 1;
    }
    for (auto& c : out) c.center /= static_cast<double>(c.multiplicity);
    return out;
}

void sort_clusters(std::vector<Cluster>& cs) {
    std::sort(cs.begin(), cs.end(), [](const Cluster& a, const Cluster& b) {
        double aa = sort_arg(a.center), ab = sort_arg(b.center);
        if (aa != ab) return aa < ab;
        return std::abs(a.center) < std::abs(b.center);
    });
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coefficients) : coef_(trim(std::move(coefficients))) {
    if (coef_.empty()) coef_.push_back(Complex(0.0));
}

bool Polynomial::is_zero() const { return coef_.size() == 1 && coef_[0] == Complex(0.0); }

Complex Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coef_.size())) return Complex(0.0);
    return coef_[k];
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc(0.0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coef_.size() == 1) return Polynomial();
    std::vector<Complex> d(coef_.size() - 1);
    for (size_t i = 1; i < coef_.size(); ++i) d[i - 1] = coef_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Complex> c(std::max(coef_.size(), o.coef_.size()), Complex(0.0));
    for (size_t i = 0; i < coef_.size(); ++i) c[i] += coef_[i];
    for (size_t i = 0; i < o.coef_.size(); ++i) c[i] += o.coef_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Complex> c(coef_.size() + o.coef_.size() - 1, Complex(0.0));
    for (size_t i = 0; i < coef_.size(); ++i)
        for (size_t j = 0; j < o.coef_.size(); ++j) c[i + j] += coef_[i] * o.coef_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(Complex s) const {
    std::vector<Complex> c(coef_);
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DegenerateInputError("division by the zero polynomial");
    if (degree() < d.degree()) return {Polynomial(), *this};
    std::vector<Complex> r(coef_);
    std::vector<Complex> q(degree() - d.degree() + 1, Complex(0.0));
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Complex c = r[k + d.degree()] / d.leading();
        q[k] = c;
        for (int i = 0; i <= d.degree(); ++i) r[k + i] -= c * d.coef_[i];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::taylor_shift(Complex center) const {
    // Repeated synthetic division by (z - center).
    std::vector<Complex> c(coef_);
    int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) c[j] += center * c[j + 1];
    return Polynomial(std::move(c));
}

double Polynomial::max_coefficient_magnitude() const {
    double m = 0.0;
    for (const auto& c : coef_) m = std::max(m, std::abs(c));
    return m;
}

Polynomial Polynomial::from_roots(Complex lead, const std::vector<Complex>& roots) {
    Polynomial p = Polynomial::constant(lead);
    for (Complex r : roots) p = p * Polynomial({-r, Complex(1.0)});
    return p;
}

int RootSet::total_multiplicity() const {
    int s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
}

std::vector<Complex> RootSet::expanded() const {
    std::vector<Complex> out;
    for (const auto& r : roots)
        for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.location);
    return out;
}

double default_cluster_tol(double max_root_modulus_estimate) {
    return 1e-8 * (1.0 + max_root_modulus_estimate);
}

RootSet poly_roots(const Polynomial& p, double cluster_tol) {
    if (p.is_zero()) throw DegenerateInputError("poly_roots: zero polynomial");
    int n = p.degree();
    if (n == 0) return RootSet{};

    const auto& c = p.coefficients();
    std::vector<Complex> monic(n);
    for (int i = 0; i < n; ++i) monic[i] = c[i] / c[n];

    std::vector<Complex> raw;
    if (n == 1) {
        raw.push_back(-monic[0]);
    } else {
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < n; ++i) companion(i, n - 1) = -monic[i];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
        for (int i = 0; i < n; ++i) raw.push_back(es.eigenvalues()(i));
    }

    // Newton polishing with a global iteration cap.
    Polynomial dp = p.derivative();
    int budget = kNewtonCap;
    for (auto& r : raw) {
        double best = std::abs(p(r));
        Complex best_z = r;
        while (budget > 0) {
            --budget;
            Complex d = dp(r);
            if (d == Complex(0.0)) break;
            Complex next = r - p(r) / d;
            double res = std::abs(p(next));
            if (res < best) {
                best = res;
                best_z = next;
                r = next;
            } else {
                break;
            }
        }
        r = best_z;
    }

    auto clusters = cluster_points(raw, cluster_tol);
    sort_clusters(clusters);

    // Residual-based acceptance.
    double maxc = p.max_coefficient_magnitude();
    double worst = 0.0;
    for (const auto& cl : clusters) {
        double scale = maxc * std::pow(1.0 + std::abs(cl.center), n);
        double res = std::abs(p(cl.center));
        worst = std::max(worst, res / scale);
    }
    if (worst > 1e-9)
        throw NumericFailureError("poly_roots: residual acceptance failed", worst);

    RootSet out;
    for (const auto& cl : clusters) out.roots.push_back({cl.center, cl.multiplicity});
    return out;
}

RootSet poly_roots(const Polynomial& p) {
    if (p.is_zero()) throw DegenerateInputError("poly_roots: zero polynomial");
    // Cauchy bound as root modulus estimate.
    double lead = std::abs(p.leading());
    double m = 0.0;
    for (const auto& c : p.coefficients()) m = std::max(m, std::abs(c));
    double bound = lead > 0.0 ? 1.0 + m / lead : 1.0;
    return poly_roots(p, default_cluster_tol(bound));
}

RationalFunction rational_reduce(const Polynomial& num, const Polynomial& den,
                                 double cluster_tol) {
    if (den.is_zero()) throw DegenerateInputError("rational function with zero denominator");
    if (num.is_zero())
        return RationalFunction(Polynomial(), Polynomial::constant(1.0), false);

    RootSet nr = num.degree() > 0 ? poly_roots(num, cluster_tol) : RootSet{};
    RootSet dr = den.degree() > 0 ? poly_roots(den, cluster_tol) : RootSet{};

    bool cancelled = false;
    std::vector<RootEntry> nroots = nr.roots, droots = dr.roots;
    for (auto& d : droots) {
        for (auto& n : nroots) {
            if (n.multiplicity == 0 || d.multiplicity == 0) continue;
            if (std::abs(n.location - d.location) <= cluster_tol) {
                int k = std::min(n.multiplicity, d.multiplicity);
                n.multiplicity -= k;
                d.multiplicity -= k;
                if (k > 0) cancelled = true;
            }
        }
    }
    if (!cancelled) {
        // Keep original coefficients (no rebuild error); just normalize.
        Complex lead = den.leading();
        return RationalFunction(num * (Complex(1.0) / lead), den * (Complex(1.0) / lead),
                                false);
    }
    std::vector<Complex> nrem, drem;
    for (const auto& r : nroots)
        for (int i = 0; i < r.multiplicity; ++i) nrem.push_back(r.location);
    for (const auto& r : droots)
        for (int i = 0; i < r.multiplicity; ++i) drem.push_back(r.location);
    Complex ratio = num.leading() / den.leading();
    Polynomial nn = Polynomial::from_roots(ratio, nrem);
    Polynomial dd = Polynomial::from_roots(Complex(1.0), drem);
    return RationalFunction(std::move(nn), std::move(dd), false);
}

RationalFunction rational_reduce(const Polynomial& num, const Polynomial& den) {
    double scale = 1.0;
    if (den.degree() > 0) {
        double m = 0.0;
        for (const auto& c : den.coefficients()) m = std::max(m, std::abs(c));
        scale = 1.0 + m / std::abs(den.leading());
    }
    return rational_reduce(num, den, default_cluster_tol(scale));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, bool reduce)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DegenerateInputError("rational function with zero denominator");
    if (reduce) *this = rational_reduce(num_, den_);
}

Complex RationalFunction::at_infinity() const {
    int dn = num_.degree(), dd = den_.degree();
    if (num_.is_zero() || dn < dd) return Complex(0.0);
    if (dn == dd) return num_.leading() / den_.leading();
    return Complex(std::numeric_limits<double>::infinity(), 0.0);
}

RationalFunction RationalFunction::derivative() const {
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFunction(std::move(n), den_ * den_, false);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_, false);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_, false);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DegenerateInputError("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_, false);
}

RationalFunction RationalFunction::operator*(Complex s) const {
    return RationalFunction(num_ * s, den_, false);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw DegenerateInputError("reciprocal of the zero rational function");
    return RationalFunction(den_, num_, false);
}

RootSet RationalFunction::poles() const {
    if (den_.degree() == 0) return RootSet{};
    return poly_roots(den_);
}

RootSet RationalFunction::zeros() const {
    if (num_.is_zero() || num_.degree() == 0) return RootSet{};
    return poly_roots(num_);
}

Complex PartialFractions::evaluate(Complex z) const {
    Complex acc = polynomial_part(z);
    for (const auto& p : poles) {
        Complex w = z - p.pole;
        Complex inv = Complex(1.0) / w;
        Complex pw = inv;
        for (int j = 0; j < p.order; ++j) {
            acc += p.coefficients[j] * pw;
            pw *= inv;
        }
    }
    return acc;
}

RationalFunction PartialFractions::recompose() const {
    RationalFunction acc(polynomial_part, Polynomial::constant(1.0), false);
    for (const auto& p : poles) {
        Polynomial base({-p.pole, Complex(1.0)});
        Polynomial den = Polynomial::constant(1.0);
        for (int j = 0; j < p.order; ++j) {
            den = den * base;
            acc = acc + RationalFunction(Polynomial::constant(p.coefficients[j]), den, false);
        }
    }
    return acc;
}

PartialFractions partial_fractions(const RationalFunction& f, double cluster_tol) {
    PartialFractions out;
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    auto [q, r] = num.divmod(den);
    out.polynomial_part = q;
    if (den.degree() == 0) {
        out.polynomial_part = num * (Complex(1.0) / den.coefficient(0));
        return out;
    }
    RootSet dr = poly_roots(den, cluster_tol);
    // Ambiguity guards.  First: a multiplicity decision was made (roots merged)
    // at a requested resolution finer than the root solver can certify, so the
    // merge cannot be distinguished from a cluster of distinct nearby poles.
    double den_scale = 1.0 + den.max_coefficient_magnitude() / std::abs(den.leading());
    for (const auto& r : dr.roots)
        if (r.multiplicity >= 2 && cluster_tol < 1e-9 * den_scale)
            throw IllConditionedInputError(
                "partial_fractions: multiple-pole decision below certifiable resolution");
    // Second: distinct pole clusters too close to separate reliably.
    for (size_t i = 0; i < dr.roots.size(); ++i)
        for (size_t j = i + 1; j < dr.roots.size(); ++j) {
            double scale =
                1.0 + std::max(std::abs(dr.roots[i].location), std::abs(dr.roots[j].location));
            // Near-coincident simple poles produce huge, nearly cancelling
            // residues; refuse separations a companion-matrix root solve
            // cannot certify in double precision.
            double sep_floor = std::max(2.0 * cluster_tol, 1e-6 * scale);
            if (std::abs(dr.roots[i].location - dr.roots[j].location) < sep_floor)
                throw IllConditionedInputError(
                    "partial_fractions: pole clustering ambiguity");
        }

    for (const auto& pr : dr.roots) {
        Complex p = pr.location;
        int k = pr.multiplicity;
        // den(p + w) / w^k rebuilt from the clustered factorization.
        Polynomial dreg = Polynomial::constant(den.leading());
        for (const auto& other : dr.roots) {
            if (&other == &pr) continue;
            Polynomial factor({p - other.location, Complex(1.0)});
            for (int i = 0; i < other.multiplicity; ++i) dreg = dreg * factor;
        }
        Polynomial nshift = r.taylor_shift(p);
        auto series = series_divide(nshift.coefficients(), dreg.coefficients(), k);
        PoleExpansion pe;
        pe.pole = p;
        pe.order = k;
        pe.coefficients.resize(k);
        for (int j = 0; j < k; ++j) pe.coefficients[j] = series[k - 1 - j];
        out.poles.push_back(std::move(pe));
    }
    return out;
}

PartialFractions partial_fractions(const RationalFunction& f) {
    const Polynomial& den = f.denominator();
    double scale = 1.0;
    if (den.degree() > 0) {
        double m = 0.0;
        for (const auto& c : den.coefficients()) m = std::max(m, std::abs(c));
        scale = 1.0 + m / std::abs(den.leading());
    }
    return partial_fractions(f, default_cluster_tol(scale));
}

int local_pole_order(const Polynomial& den_shifted, double ambiguity_lo,
                     double ambiguity_hi) {
    // Number of leading (low-order) coefficients of den(p + w) that vanish,
    // i.e. the multiplicity of p as a denominator root.  Coefficients in the
    // gray zone between clearly-zero and clearly-nonzero make the order
    // undecidable at working precision.
    const auto& c = den_shifted.coefficients();
    double scale = den_shifted.max_coefficient_magnitude();
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        double a = std::abs(c[j]);
        if (a > ambiguity_hi * scale) return j;
        if (a > ambiguity_lo * scale)
            throw AmbiguousPoleError(
                "pole order undecidable: denominator coefficient in the ambiguity zone");
    }
    throw DegenerateInputError("local_pole_order: zero denominator");
}

std::vector<Complex> laurent_coefficients(const RationalFunction& f, Complex p,
                                          int order_from, int count) {
    Polynomial dshift = f.denominator().taylor_shift(p);
    // Low-level primitive: accept the order decision without an ambiguity
    // zone (callers wanting the guard use residue_at).
    int k = local_pole_order(dshift, 1e-11, 1e-11);
    const auto& dc = dshift.coefficients();
    std::vector<Complex> dreg(dc.begin() + k, dc.end());
    Polynomial nshift = f.numerator().taylor_shift(p);
    int series_len = count + k;
    auto series = series_divide(nshift.coefficients(), dreg, series_len);
    std::vector<Complex> out(count, Complex(0.0));
    for (int i = 0; i < count; ++i) {
        int order = i - order_from;  // order of (z-p)^order
        int j = order + k;
        if (j >= 0 && j < series_len) out[i] = series[j];
    }
    return out;
}

}  // namespace necklace

#ifndef NECKLACE_COMPLEX_ALGEBRA_HPP
#define NECKLACE_COMPLEX_ALGEBRA_HPP

#include <complex>
#include <vector>

#include "necklace/errors.hpp"

namespace necklace {

using Complex = std::complex<double>;

/// Univariate polynomial with complex coefficients, stored in ascending
/// degree with a nonzero leading coefficient (the zero polynomial is {0}).
class Polynomial {
  public:
    Polynomial() : coef_{Complex(0.0)} {}
    explicit Polynomial(std::vector<Complex> coefficients);
    Polynomial(std::initializer_list<Complex> coefficients)
        : Polynomial(std::vector<Complex>(coefficients)) {}

    static Polynomial constant(Complex c) { return Polynomial({c}); }
    static Polynomial identity() { return Polynomial({Complex(0.0), Complex(1.0)}); }
    // lead * prod (z - r_i)
    static Polynomial from_roots(Complex lead, const std::vector<Complex>& roots);

    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const;
    const std::vector<Complex>& coefficients() const { return coef_; }
    Complex leading() const { return coef_.back(); }
    Complex coefficient(int k) const;

    Complex operator()(Complex z) const;  // Horner
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(Complex s) const;
    Polynomial operator-() const { return *this * Complex(-1.0); }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    // Coefficients of p(center + w) in powers of w.
    Polynomial taylor_shift(Complex center) const;

    double max_coefficient_magnitude() const;

  private:
    std::vector<Complex> coef_;
};

struct RootEntry {
    Complex location;
    int multiplicity;
};

/// Roots with multiplicities, sorted by (argument in [0,2pi), then modulus).
struct RootSet {
    std::vector<RootEntry> roots;

    int total_multiplicity() const;
    std::vector<Complex> expanded() const;  // each root repeated by multiplicity
};

double default_cluster_tol(double max_root_modulus_estimate);

/// Deterministic root finding: companion-matrix eigenvalues followed by
/// Newton polishing (iteration cap 500 across all roots), then clustering
/// within cluster_tol to infer multiplicities.
RootSet poly_roots(const Polynomial& p, double cluster_tol);
RootSet poly_roots(const Polynomial& p);  // default cluster_tol

/// Quotient of polynomials.  Arithmetic is exact (no cancellation of common
/// factors); call rational_reduce to cancel shared roots when a reduced
/// representative is required, e.g. before pole enumeration.
class RationalFunction {
  public:
    RationalFunction() : num_(Polynomial::constant(0.0)), den_(Polynomial::constant(1.0)) {}
    RationalFunction(Polynomial num, Polynomial den, bool reduce = true);

    static RationalFunction constant(Complex c) {
        return RationalFunction(Polynomial::constant(c), Polynomial::constant(1.0), false);
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    Complex operator()(Complex z) const { return num_(z) / den_(z); }
    Complex at_infinity() const;

    RationalFunction derivative() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator*(Complex s) const;
    RationalFunction operator-() const { return *this * Complex(-1.0); }
    RationalFunction reciprocal() const;

    bool is_zero() const { return num_.is_zero(); }

    /// Poles (roots of the reduced denominator), with multiplicity.
    RootSet poles() const;
    /// Zeros (roots of the reduced numerator), with multiplicity.
    RootSet zeros() const;

  private:
    Polynomial num_;
    Polynomial den_;
};

RationalFunction rational_reduce(const Polynomial& num, const Polynomial& den);
RationalFunction rational_reduce(const Polynomial& num, const Polynomial& den,
                                 double cluster_tol);

struct PoleExpansion {
    Complex pole;
    int order;
    // coefficients[j] multiplies (z - pole)^{-(j+1)}; coefficients[0] is the residue.
    std::vector<Complex> coefficients;
};

struct PartialFractions {
    std::vector<PoleExpansion> poles;
    Polynomial polynomial_part;

    Complex evaluate(Complex z) const;
    RationalFunction recompose() const;
};

PartialFractions partial_fractions(const RationalFunction& f);
PartialFractions partial_fractions(const RationalFunction& f, double cluster_tol);

/// Multiplicity of w = 0 as a root of den_shifted, read off the leading
/// coefficients: |c_j| <= ambiguity_lo * scale counts as zero and
/// |c_j| > ambiguity_hi * scale as nonzero; anything in between throws
/// AmbiguousPoleError.
int local_pole_order(const Polynomial& den_shifted, double ambiguity_lo,
                     double ambiguity_hi);

/// Laurent coefficients of f at p: returns c_{-order_from}, ..., c_{count-1-order_from}
/// where f(z) = sum c_k (z-p)^k. order_from is the pole order bound at p (>= actual).
std::vector<Complex> laurent_coefficients(const RationalFunction& f, Complex p,
                                          int order_from, int count);

}  // namespace necklace

#endif

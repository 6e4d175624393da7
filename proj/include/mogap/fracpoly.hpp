#pragma once

// Generalized polynomials sum_i c_i x^{e_i} with real exponents e_i >= 0.
//
// Every integrand in the h(c) functional is a product of such sums and the
// kernels (u-v)^{a-1}, so the whole computation closes over this type once
// the two Beta identities
//
//   int_0^u (u-v)^{a-1} v^b dv = B(a, b+1) u^{a+b}
//   int_0^u v^e (u-v)^f dv     = B(e+1, f+1) u^{e+f+1}
//
// are available termwise.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace mogap {

struct Term {
    double coef = 0.0;
    double exponent = 0.0;

    friend bool operator==(const Term&, const Term&) = default;
};

class FracPoly {
public:
    // Exponents closer than this are treated as equal and merged.
    static constexpr double kMergeTolerance = 1e-9;

    FracPoly() = default;
    explicit FracPoly(std::vector<Term> terms);
    FracPoly(std::initializer_list<Term> terms);

    // Dense ascending-degree coefficients: {c0, c1, c2} -> c0 + c1 x + c2 x^2.
    static FracPoly from_coefficients(std::span<const double> coefs);
    static FracPoly monomial(double coef, double exponent);
    static FracPoly constant(double value) { return monomial(value, 0.0); }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool has_integer_exponents() const;
    double max_exponent() const;

    // Dense ascending coefficients; requires integer exponents.
    std::vector<double> dense_coefficients() const;

    double operator()(double x) const { return eval(x); }
    double eval(double x) const;

    friend bool operator==(const FracPoly&, const FracPoly&) = default;

private:
    void normalize();
    std::vector<Term> terms_;
};

FracPoly make(std::span<const std::pair<double, double>> terms);

FracPoly add(const FracPoly& p, const FracPoly& q);
FracPoly scale(const FracPoly& p, double s);
FracPoly mul(const FracPoly& p, const FracPoly& q);

inline FracPoly operator+(const FracPoly& p, const FracPoly& q) { return add(p, q); }
inline FracPoly operator-(const FracPoly& p) { return scale(p, -1.0); }
inline FracPoly operator-(const FracPoly& p, const FracPoly& q) { return add(p, scale(q, -1.0)); }
inline FracPoly operator*(const FracPoly& p, const FracPoly& q) { return mul(p, q); }
inline FracPoly operator*(double s, const FracPoly& p) { return scale(p, s); }

// x -> q(1-x) by binomial expansion. Integer exponents only.
FracPoly compose_one_minus(const FracPoly& q);

// x -> q(x)/x. Every exponent of q must be >= 1.
FracPoly divide_by_x(const FracPoly& q);

// Euler Beta function via log-Gamma.
double beta(double a, double b);

// u -> int_0^u (u-v)^{a-1} p(v) dv.
FracPoly beta_convolve(double a, const FracPoly& p);

// u -> int_0^u g(v) q(u-v) dv.
FracPoly convolve(const FracPoly& g, const FracPoly& q);

// int_0^1 (1-u)^{a-1} p(u) du. a == 1 is the plain integral sum c/(e+1).
double integrate_weighted(double a, const FracPoly& p);

// Truncated Taylor series of sin(pi c v)/v and sin(pi c v) in v.
inline constexpr int kDefaultSeriesTerms = 24;
FracPoly sinc_series(double c, int n_terms = kDefaultSeriesTerms);
FracPoly sin_series(double c, int n_terms = kDefaultSeriesTerms);

// Magnitude of the first omitted term (pi c)^{2n+1}/(2n+1)!, which bounds the
// truncation error of sinc_series on [0,1] while pi c < 2n+2.
double sinc_truncation_bound(double c, int n_terms);

}  // namespace mogap

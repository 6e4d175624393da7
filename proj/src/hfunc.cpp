#include "mogap/hfunc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mogap/errors.hpp"

namespace mogap {

namespace {

using std::numbers::pi;

// int_0^1 w(1-u) g(u) du for an integer-exponent weight w.
double integrate_against_reflected(const FracPoly& weight, const FracPoly& g) {
    if (weight.is_zero() || g.is_zero()) return 0.0;
    return integrate_weighted(1.0, mul(compose_one_minus(weight), g));
}

// int_0^1 P1(1-u) int_0^u P1(u-t) G(t) dt du; the (u, v in [1-u, 1]) region
// of the doubled-P terms after t = u + v - 1.
double double_p1_integral(const FracPoly& p1, const FracPoly& G) {
    if (p1.is_zero() || G.is_zero()) return 0.0;
    return integrate_against_reflected(p1, convolve(G, p1));
}

// Turns -0.0 into +0.0 so exactly-vanishing components print as 0.
double canon(double x) { return x + 0.0; }

}  // namespace

DenominatorTerms denominator_terms(const CoeffScheme& scheme) {
    scheme.validate();
    const double r = scheme.r;
    const double a = r * r;
    const FracPoly p1 = p1_of(scheme);
    const FracPoly p2 = p2_of(scheme);

    DenominatorTerms d;
    d.d1 = integrate_weighted(a, mul(scheme.f1, scheme.f1));
    d.d2 = 2.0 * a * integrate_against_reflected(p1, beta_convolve(a, mul(scheme.f1, scheme.f1t)));

    const FracPoly F = beta_convolve(a, mul(scheme.f1t, scheme.f1t));
    d.d31 = a * a * double_p1_integral(p1, F);
    d.d32 = a * integrate_against_reflected(p2, F);

    d.d1 = canon(d.d1);
    d.d2 = canon(d.d2);
    d.d31 = canon(d.d31);
    d.d32 = canon(d.d32);
    return d;
}

NumeratorTerms numerator_terms(const CoeffScheme& scheme, double c, int series_terms) {
    scheme.validate();
    if (!(c > 0.0 && c < 1.0)) throw DomainError("numerator_terms: c must lie in (0, 1)");

    const double r = scheme.r;
    const double a = r * r;
    const FracPoly p1 = p1_of(scheme);
    const FracPoly p2 = p2_of(scheme);
    const FracPoly sinc = sinc_series(c, series_terms);
    const FracPoly sine_p1 = mul(sin_series(c, series_terms), p1);

    const FracPoly& f1 = scheme.f1;
    const FracPoly& ft = scheme.f1t;

    const FracPoly sinc_f1 = convolve(sinc, f1);
    const FracPoly sinc_ft = convolve(sinc, ft);

    const double k1 = -2.0 * r / pi;
    const double k3 = -2.0 * r * a / pi;
    const double k5 = -2.0 * r * a * a / pi;

    NumeratorTerms n;
    n.n1 = k1 * integrate_weighted(a, mul(f1, sinc_f1));
    n.n2 = k3 * integrate_against_reflected(p1, beta_convolve(a, mul(ft, sinc_f1)));
    n.n31 = k3 * integrate_against_reflected(p1, beta_convolve(a, mul(f1, sinc_ft)));
    n.n32 = k1 * integrate_weighted(a, mul(f1, convolve(sine_p1, ft)));

    const FracPoly G = beta_convolve(a, mul(ft, sinc_ft));
    n.n41 = k5 * double_p1_integral(p1, G);
    n.n42 = k3 * integrate_against_reflected(p2, G);
    n.n43 = k3 * integrate_against_reflected(p1, beta_convolve(a, mul(ft, convolve(sine_p1, ft))));

    for (double* x : {&n.n1, &n.n2, &n.n31, &n.n32, &n.n41, &n.n42, &n.n43}) *x = canon(*x);
    return n;
}

HBreakdown assemble(const DenominatorTerms& d, const NumeratorTerms& n, double c) {
    HBreakdown b;
    b.d1 = d.d1;
    b.d2 = d.d2;
    b.d31 = d.d31;
    b.d32 = d.d32;
    b.n1 = n.n1;
    b.n2 = n.n2;
    b.n31 = n.n31;
    b.n32 = n.n32;
    b.n41 = n.n41;
    b.n42 = n.n42;
    b.n43 = n.n43;
    b.c = c;
    const double den = b.denominator();
    if (!(std::abs(den) > kDegenerateDenominator)) {
        throw DegenerateSchemeError("degenerate scheme: denominator sum is " + std::to_string(den));
    }
    b.h = c - b.numerator() / den;
    return b;
}

HBreakdown h_value(const CoeffScheme& scheme, double c, int series_terms) {
    return assemble(denominator_terms(scheme), numerator_terms(scheme, c, series_terms), c);
}

double d31_swapped_order(const CoeffScheme& scheme) {
    scheme.validate();
    const double a = scheme.r * scheme.r;
    const FracPoly p1 = p1_of(scheme);
    if (p1.is_zero() || scheme.f1t.is_zero()) return 0.0;
    const FracPoly F = beta_convolve(a, mul(scheme.f1t, scheme.f1t));
    return a * a * integrate_against_reflected(convolve(p1, p1), F);
}

}  // namespace mogap

#pragma once

#include <array>
#include <string_view>

#include "mogap/fracpoly.hpp"
#include "mogap/scheme.hpp"

namespace mogap {

// Leading-order components of the Montgomery-Odlyzko ratio, each divided by
// the common factor A_r r^2 (log T)^{r^2}.
struct HBreakdown {
    double d1 = 0, d2 = 0, d31 = 0, d32 = 0;
    double n1 = 0, n2 = 0, n31 = 0, n32 = 0, n41 = 0, n42 = 0, n43 = 0;
    double h = 0;
    double c = 0;

    static constexpr std::array<std::string_view, 11> kNames = {
        "d1", "d2", "d31", "d32", "n1", "n2", "n31", "n32", "n41", "n42", "n43"};

    std::array<double, 11> components() const { return {d1, d2, d31, d32, n1, n2, n31, n32, n41, n42, n43}; }
    double denominator() const { return d1 + d2 + d31 + d32; }
    double numerator() const { return n1 + n2 + n31 + n32 + n41 + n42 + n43; }
};

struct DenominatorTerms {
    double d1 = 0, d2 = 0, d31 = 0, d32 = 0;
};

struct NumeratorTerms {
    double n1 = 0, n2 = 0, n31 = 0, n32 = 0, n41 = 0, n42 = 0, n43 = 0;
};

inline constexpr double kDegenerateDenominator = 1e-12;

DenominatorTerms denominator_terms(const CoeffScheme& scheme);

// Requires 0 < c < 1.
NumeratorTerms numerator_terms(const CoeffScheme& scheme, double c, int series_terms = kDefaultSeriesTerms);

// h(c) = c - (sum of n) / (sum of d). Throws DegenerateSchemeError when the
// denominator is below kDegenerateDenominator in magnitude.
HBreakdown h_value(const CoeffScheme& scheme, double c, int series_terms = kDefaultSeriesTerms);

// Assembles h from already computed components.
HBreakdown assemble(const DenominatorTerms& d, const NumeratorTerms& n, double c);

// d31 with the order of the two P1 integrations exchanged:
//   r^4 int_0^1 F(t) (P1 * P1)(1 - t) dt,  F = beta_convolve(r^2, f1t^2),
// where (P1 * P1) is the Beta convolution of P1 with itself.
double d31_swapped_order(const CoeffScheme& scheme);

}  // namespace mogap

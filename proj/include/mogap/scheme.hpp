#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mogap/fracpoly.hpp"

namespace mogap {

// Coefficient scheme
//
//   a_k = lambda(k) d_r(k) k^{-1/2} [ f1(x) + sum_{p | k} P(log p / log K) * f1t(x) ],
//   x   = log(K/k) / log K,
//
// with the prime sum over distinct primes. f1t is the "tilde" polynomial.
struct CoeffScheme {
    double r = 1.0;
    FracPoly f1;
    FracPoly f1t;
    FracPoly P;

    // Throws DomainError unless r >= 1, all exponents are integers and P has
    // no constant term.
    void validate() const;

    friend bool operator==(const CoeffScheme&, const CoeffScheme&) = default;

    static CoeffScheme from_coefficients(double r, std::vector<double> f1, std::vector<double> f1t,
                                         std::vector<double> P);
};

// P1(y) = P(y)/y and P2(y) = P(y)^2/y.
FracPoly p1_of(const CoeffScheme& scheme);
FracPoly p2_of(const CoeffScheme& scheme);

// The published numerically optimal polynomials (all at r = 1.18).
struct TableRow {
    std::string name;
    double c;
    CoeffScheme scheme;
};

const std::vector<TableRow>& table1_rows();

// Looks up "table1-row1" .. "table1-row3"; throws ValidationError otherwise.
const TableRow& preset(std::string_view name);

}  // namespace mogap

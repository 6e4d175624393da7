#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mogap/scheme.hpp"

namespace mogap::sieve {

inline constexpr std::int64_t kMaxLimit = 100'000'000;

// Per-integer arithmetic tables on [0, limit]; index 0 is unused.
struct SieveTable {
    std::int64_t limit = 0;
    double r = 1.0;
    std::vector<std::uint32_t> smallest_prime_factor;
    std::vector<std::int8_t> liouville;
    std::vector<double> dr;
    std::vector<double> mangoldt;

    // Distinct prime divisors of n, ascending.
    std::vector<std::uint32_t> distinct_primes(std::int64_t n) const;
};

// Smallest-prime-factor sieve; d_r(p^a) = d_r(p^{a-1}) (a-1+r)/a.
// Throws ResourceError unless 2 <= K <= kMaxLimit.
SieveTable build_tables(double r, std::int64_t K);

// K = floor(T (log T)^{-2}).
std::int64_t cutoff(double T);

// a_k for 0 <= k <= K (a_0 = 0). Requires tables.limit >= K and matching r.
std::vector<double> coeffs_ak(const CoeffScheme& scheme, const SieveTable& tables, std::int64_t K);

struct FiniteH {
    double h = 0.0;
    double num = 0.0;
    double den = 0.0;
    double num_prime_powers = 0.0;  // part of num from n = p^a, a >= 2
    std::int64_t K = 0;
};

// The literal finite ratio c - num/den with num over all prime powers n <= K.
FiniteH finite_h(const CoeffScheme& scheme, double c, double T);

// Same sums for caller-supplied a_k (index 0 ignored, size K+1).
FiniteH finite_h_from_coeffs(std::span<const double> a, const SieveTable& tables, double c, double T);

// sum_{p <= y} log p / p - log y.
double mertens_deficit(std::int64_t y);

// (x, sum_{k<=x} d_r(k)^2/k / (log x)^{r^2}) for each x, ascending.
std::vector<std::pair<double, double>> dr_mean_square_trend(double r, std::span<const std::int64_t> xs);
std::vector<std::pair<double, double>> dr_mean_square_trend(const SieveTable& tables,
                                                             std::span<const std::int64_t> xs);

}  // namespace mogap::sieve

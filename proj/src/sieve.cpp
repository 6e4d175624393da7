#include "mogap/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mogap/errors.hpp"

namespace mogap::sieve {

std::vector<std::uint32_t> SieveTable::distinct_primes(std::int64_t n) const {
    std::vector<std::uint32_t> out;
    while (n > 1) {
        const std::uint32_t p = smallest_prime_factor[static_cast<std::size_t>(n)];
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    return out;
}

SieveTable build_tables(double r, std::int64_t K) {
    if (K < 2 || K > kMaxLimit) {
        throw ResourceError("build_tables: limit " + std::to_string(K) + " outside [2, " +
                            std::to_string(kMaxLimit) + "]");
    }
    if (!(r > 0.0)) throw DomainError("build_tables: r must be positive");

    const auto n_max = static_cast<std::size_t>(K);
    SieveTable t;
    t.limit = K;
    t.r = r;
    t.smallest_prime_factor.assign(n_max + 1, 0);
    t.liouville.assign(n_max + 1, 0);
    t.dr.assign(n_max + 1, 0.0);
    t.mangoldt.assign(n_max + 1, 0.0);

    // linear sieve
    std::vector<std::uint32_t> primes;
    auto& spf = t.smallest_prime_factor;
    for (std::size_t i = 2; i <= n_max; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > spf[i] || i * p > n_max) break;
            spf[i * p] = p;
        }
    }

    // d_r at prime powers depends only on the exponent.
    std::vector<double> dr_pow{1.0};
    for (int e = 1; e < 64; ++e) dr_pow.push_back(dr_pow.back() * (e - 1 + r) / e);

    // cofactor[n] = n with its spf-power removed; exponent[n] = that power.
    std::vector<std::uint32_t> cofactor(n_max + 1, 1);
    std::vector<std::uint8_t> exponent(n_max + 1, 0);
    t.liouville[1] = 1;
    t.dr[1] = 1.0;
    for (std::size_t n = 2; n <= n_max; ++n) {
        const std::uint32_t p = spf[n];
        const std::size_t m = n / p;
        if (spf[m] == p) {
            exponent[n] = static_cast<std::uint8_t>(exponent[m] + 1);
            cofactor[n] = cofactor[m];
        } else {
            exponent[n] = 1;
            cofactor[n] = static_cast<std::uint32_t>(m);
        }
        t.liouville[n] = static_cast<std::int8_t>(-t.liouville[m]);
        t.dr[n] = t.dr[cofactor[n]] * dr_pow[exponent[n]];
        if (cofactor[n] == 1) t.mangoldt[n] = std::log(static_cast<double>(p));
    }
    return t;
}

std::int64_t cutoff(double T) {
    const double L = std::log(T);
    return static_cast<std::int64_t>(std::floor(T / (L * L)));
}

std::vector<double> coeffs_ak(const CoeffScheme& scheme, const SieveTable& tables, std::int64_t K) {
    scheme.validate();
    if (K > tables.limit) throw DomainError("coeffs_ak: tables too small for K");
    if (std::abs(tables.r - scheme.r) > 1e-15) throw DomainError("coeffs_ak: table r does not match scheme");
    if (K < 2) throw DomainError("coeffs_ak: K must be >= 2");

    const double logK = std::log(static_cast<double>(K));
    std::vector<double> a(static_cast<std::size_t>(K) + 1, 0.0);
    for (std::int64_t k = 1; k <= K; ++k) {
        const double x = 1.0 - std::log(static_cast<double>(k)) / logK;
        double prime_sum = 0.0;
        if (!scheme.P.is_zero()) {
            for (std::uint32_t p : tables.distinct_primes(k)) {
                prime_sum += scheme.P(std::log(static_cast<double>(p)) / logK);
            }
        }
        const auto i = static_cast<std::size_t>(k);
        const double shape = scheme.f1(x) + (prime_sum == 0.0 ? 0.0 : prime_sum * scheme.f1t(x));
        a[i] = tables.liouville[i] * tables.dr[i] / std::sqrt(static_cast<double>(k)) * shape;
    }
    return a;
}

FiniteH finite_h_from_coeffs(std::span<const double> a, const SieveTable& tables, double c, double T) {
    if (a.size() < 2) throw DomainError("finite_h: need at least a_1");
    const auto K = static_cast<std::int64_t>(a.size()) - 1;
    if (K > tables.limit) throw DomainError("finite_h: tables too small for K");
    const double logT = std::log(T);

    FiniteH out;
    out.K = K;
    for (std::int64_t k = 1; k <= K; ++k) out.den += a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)];

    for (std::int64_t n = 2; n <= K; ++n) {
        const double lam = tables.mangoldt[static_cast<std::size_t>(n)];
        if (lam == 0.0) continue;
        const double logn = std::log(static_cast<double>(n));
        const double g = 2.0 * std::sin(std::numbers::pi * c * logn / logT) / (std::numbers::pi * logn);
        double inner = 0.0;
        for (std::int64_t k = 1; k * n <= K; ++k) {
            inner += a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k * n)];
        }
        const double term = inner * g * lam / std::sqrt(static_cast<double>(n));
        out.num += term;
        if (tables.smallest_prime_factor[static_cast<std::size_t>(n)] != n) out.num_prime_powers += term;
    }
    if (!(out.den > 0.0)) throw DegenerateSchemeError("finite_h: all coefficients vanish");
    out.h = c - out.num / out.den;
    return out;
}

FiniteH finite_h(const CoeffScheme& scheme, double c, double T) {
    if (!(T >= 100.0)) throw DomainError("finite_h: T must be >= 100");
    const std::int64_t K = cutoff(T);
    if (K < 100) throw DomainError("finite_h: K = T/(log T)^2 must be >= 100");
    if (K > kMaxLimit) throw ResourceError("finite_h: K exceeds table limit");
    const SieveTable tables = build_tables(scheme.r, K);
    const std::vector<double> a = coeffs_ak(scheme, tables, K);
    return finite_h_from_coeffs(a, tables, c, T);
}

double mertens_deficit(std::int64_t y) {
    if (y < 2) throw DomainError("mertens_deficit: y must be >= 2");
    if (y > kMaxLimit) throw ResourceError("mertens_deficit: y too large");
    const auto n = static_cast<std::size_t>(y);
    std::vector<bool> composite(n + 1, false);
    double sum = 0.0;
    for (std::size_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        sum += std::log(static_cast<double>(p)) / static_cast<double>(p);
        for (std::size_t q = p * p; q <= n; q += p) composite[q] = true;
    }
    return sum - std::log(static_cast<double>(y));
}

std::vector<std::pair<double, double>> dr_mean_square_trend(const SieveTable& tables,
                                                             std::span<const std::int64_t> xs) {
    std::vector<std::pair<double, double>> out;
    if (xs.empty()) return out;
    if (!std::is_sorted(xs.begin(), xs.end())) throw DomainError("dr_mean_square_trend: xs must be increasing");
    if (xs.back() > tables.limit) throw DomainError("dr_mean_square_trend: x exceeds table limit");
    if (xs.front() < 2) throw DomainError("dr_mean_square_trend: x must be >= 2");

    const double a = tables.r * tables.r;
    double sum = 0.0;
    std::int64_t k = 0;
    for (std::int64_t x : xs) {
        while (k < x) {
            ++k;
            const double d = tables.dr[static_cast<std::size_t>(k)];
            sum += d * d / static_cast<double>(k);
        }
        out.emplace_back(static_cast<double>(x), sum / std::pow(std::log(static_cast<double>(x)), a));
    }
    return out;
}

std::vector<std::pair<double, double>> dr_mean_square_trend(double r, std::span<const std::int64_t> xs) {
    if (xs.empty()) return {};
    return dr_mean_square_trend(build_tables(r, std::max<std::int64_t>(2, xs.back())), xs);
}

}  // namespace mogap::sieve

#include "mogap/fracpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mogap/errors.hpp"

namespace mogap {

namespace {

bool is_integral(double e) { return std::abs(e - std::round(e)) < FracPoly::kMergeTolerance; }

}  // namespace

FracPoly::FracPoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

FracPoly::FracPoly(std::initializer_list<Term> terms) : terms_(terms) { normalize(); }

FracPoly FracPoly::from_coefficients(std::span<const double> coefs) {
    std::vector<Term> terms;
    terms.reserve(coefs.size());
    for (std::size_t i = 0; i < coefs.size(); ++i) {
        terms.push_back({coefs[i], static_cast<double>(i)});
    }
    return FracPoly(std::move(terms));
}

FracPoly FracPoly::monomial(double coef, double exponent) { return FracPoly({Term{coef, exponent}}); }

void FracPoly::normalize() {
    for (const auto& t : terms_) {
        if (!(t.exponent >= 0.0)) {
            throw DomainError("FracPoly: negative exponent " + std::to_string(t.exponent));
        }
    }
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!merged.empty() && t.exponent - merged.back().exponent < kMergeTolerance) {
            merged.back().coef += t.coef;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
    terms_ = std::move(merged);
}

bool FracPoly::has_integer_exponents() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integral(t.exponent); });
}

double FracPoly::max_exponent() const { return terms_.empty() ? 0.0 : terms_.back().exponent; }

std::vector<double> FracPoly::dense_coefficients() const {
    if (!has_integer_exponents()) {
        throw DomainError("dense_coefficients: non-integer exponent");
    }
    std::vector<double> out;
    if (terms_.empty()) return out;
    out.assign(static_cast<std::size_t>(std::lround(max_exponent())) + 1, 0.0);
    for (const auto& t : terms_) {
        out[static_cast<std::size_t>(std::lround(t.exponent))] += t.coef;
    }
    return out;
}

double FracPoly::eval(double x) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        sum += t.exponent == 0.0 ? t.coef : t.coef * std::pow(x, t.exponent);
    }
    return sum;
}

FracPoly make(std::span<const std::pair<double, double>> terms) {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& [c, e] : terms) out.push_back({c, e});
    return FracPoly(std::move(out));
}

FracPoly add(const FracPoly& p, const FracPoly& q) {
    std::vector<Term> out(p.terms());
    out.insert(out.end(), q.terms().begin(), q.terms().end());
    return FracPoly(std::move(out));
}

FracPoly scale(const FracPoly& p, double s) {
    std::vector<Term> out(p.terms());
    for (auto& t : out) t.coef *= s;
    return FracPoly(std::move(out));
}

FracPoly mul(const FracPoly& p, const FracPoly& q) {
    std::vector<Term> out;
    out.reserve(p.size() * q.size());
    for (const auto& a : p.terms()) {
        for (const auto& b : q.terms()) {
            out.push_back({a.coef * b.coef, a.exponent + b.exponent});
        }
    }
    return FracPoly(std::move(out));
}

FracPoly compose_one_minus(const FracPoly& q) {
    if (!q.has_integer_exponents()) {
        throw DomainError("compose_one_minus: non-integer exponent has no finite binomial expansion");
    }
    std::vector<Term> out;
    for (const auto& t : q.terms()) {
        const long n = std::lround(t.exponent);
        double binom = 1.0;
        for (long k = 0; k <= n; ++k) {
            out.push_back({t.coef * (k % 2 == 0 ? binom : -binom), static_cast<double>(k)});
            binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
        }
    }
    return FracPoly(std::move(out));
}

FracPoly divide_by_x(const FracPoly& q) {
    std::vector<Term> out(q.terms());
    for (auto& t : out) {
        if (t.exponent < 1.0 - FracPoly::kMergeTolerance) {
            throw DomainError("divide_by_x: term of degree < 1");
        }
        t.exponent = std::max(0.0, t.exponent - 1.0);
    }
    return FracPoly(std::move(out));
}

double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("beta: arguments must be positive");
    }
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

FracPoly beta_convolve(double a, const FracPoly& p) {
    if (!(a > 0.0)) throw DomainError("beta_convolve: a must be positive");
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        out.push_back({t.coef * beta(a, t.exponent + 1.0), a + t.exponent});
    }
    return FracPoly(std::move(out));
}

FracPoly convolve(const FracPoly& g, const FracPoly& q) {
    std::vector<Term> out;
    out.reserve(g.size() * q.size());
    for (const auto& s : g.terms()) {
        for (const auto& t : q.terms()) {
            out.push_back({s.coef * t.coef * beta(s.exponent + 1.0, t.exponent + 1.0),
                           s.exponent + t.exponent + 1.0});
        }
    }
    return FracPoly(std::move(out));
}

double integrate_weighted(double a, const FracPoly& p) {
    if (!(a > 0.0)) throw DomainError("integrate_weighted: a must be positive");
    double sum = 0.0;
    if (a == 1.0) {
        for (const auto& t : p.terms()) sum += t.coef / (t.exponent + 1.0);
    } else {
        for (const auto& t : p.terms()) sum += t.coef * beta(a, t.exponent + 1.0);
    }
    return sum;
}

FracPoly sinc_series(double c, int n_terms) {
    if (n_terms < 1) throw DomainError("sinc_series: n_terms must be >= 1");
    const double w = std::numbers::pi * c;
    std::vector<Term> out;
    out.reserve(static_cast<std::size_t>(n_terms));
    // term_j = (-1)^j w^{2j+1} / (2j+1)!
    double term = w;
    for (int j = 0; j < n_terms; ++j) {
        out.push_back({term, 2.0 * j});
        term *= -w * w / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
    }
    return FracPoly(std::move(out));
}

FracPoly sin_series(double c, int n_terms) { return mul(FracPoly::monomial(1.0, 1.0), sinc_series(c, n_terms)); }

double sinc_truncation_bound(double c, int n_terms) {
    const double w = std::numbers::pi * std::abs(c);
    const int k = 2 * n_terms + 1;
    return std::exp(k * std::log(w) - std::lgamma(k + 1.0));
}

}  // namespace mogap

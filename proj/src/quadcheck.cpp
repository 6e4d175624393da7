#include "mogap/quadcheck.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "mogap/errors.hpp"

namespace mogap::quad {

namespace {

using std::numbers::pi;

// Plain dense polynomial, kept separate from FracPoly so the oracle shares no
// arithmetic with the closed-form path.
struct Dense {
    std::vector<double> c;  // ascending

    double operator()(double x) const {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    bool zero() const {
        for (double v : c) {
            if (v != 0.0) return false;
        }
        return true;
    }
};

Dense dense_of(const FracPoly& p) { return Dense{p.dense_coefficients()}; }

Dense square(const Dense& p) {
    if (p.c.empty()) return {};
    std::vector<double> out(2 * p.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        for (std::size_t j = 0; j < p.c.size(); ++j) out[i + j] += p.c[i] * p.c[j];
    }
    return Dense{out};
}

Dense shift_down(const Dense& p) {
    if (p.c.empty()) return {};
    if (p.c[0] != 0.0) throw DomainError("quadcheck: P has a constant term");
    return Dense{std::vector<double>(p.c.begin() + 1, p.c.end())};
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

}  // namespace

QuadRule gauss_legendre(int order) {
    if (order < 2 || order > 128) {
        throw DomainError("gauss_legendre: order " + std::to_string(order) + " outside [2, 128]");
    }
    const int n = order;
    QuadRule rule;
    rule.order = n;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        {
            // refresh derivative at the converged node
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

Integrator::Integrator(int order, int clustering) : order_(order) {
    if (clustering < 1) throw DomainError("Integrator: clustering must be >= 1");
    const QuadRule rule = gauss_legendre(order);
    const int m = clustering;
    const int top = 2 * m - 1;
    const double inv_beta = std::exp(std::lgamma(2.0 * m) - 2.0 * std::lgamma(static_cast<double>(m)));
    x_.reserve(rule.nodes.size());
    w_.reserve(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = 0.5 * (rule.nodes[i] + 1.0);
        double phi = 0.0;
        for (int j = m; j <= top; ++j) {
            phi += binomial(top, j) * std::pow(t, j) * std::pow(1.0 - t, top - j);
        }
        const double dphi = inv_beta * std::pow(t * (1.0 - t), m - 1);
        x_.push_back(phi);
        w_.push_back(0.5 * rule.weights[i] * dphi);
    }
}

HBreakdown h_value_numeric(const CoeffScheme& scheme, double c, int order) {
    scheme.validate();
    if (order < 16) throw DomainError("h_value_numeric: order must be >= 16");
    if (!(c > 0.0 && c < 1.0)) throw DomainError("h_value_numeric: c must lie in (0, 1)");

    const Integrator I(order);
    const double r = scheme.r;
    const double a = r * r;
    const double am1 = a - 1.0;
    const Dense f1 = dense_of(scheme.f1);
    const Dense ft = dense_of(scheme.f1t);
    const Dense P = dense_of(scheme.P);
    const Dense P1 = shift_down(P);
    const Dense P2 = shift_down(square(P));
    const bool noP = P.zero();
    const bool noF1 = f1.zero();
    const bool noFt = ft.zero();

    auto kernel = [am1](double x) { return std::pow(x, am1); };
    auto sinc = [c](double v) { return std::sin(pi * c * v) / v; };
    auto sine = [c](double v) { return std::sin(pi * c * v); };

    // int_0^v sin(pi c w)/w g(v - w) dw
    auto sinc_conv = [&](const Dense& g, double v) {
        return I(0.0, v, [&](double w) { return sinc(w) * g(v - w); });
    };

    using Job = std::function<double()>;
    const std::array<Job, 11> jobs = {
        // d1
        [&] {
            if (noF1) return 0.0;
            return I(0.0, 1.0, [&](double u) { return kernel(1.0 - u) * f1(u) * f1(u); });
        },
        // d2
        [&] {
            if (noP || noF1 || noFt) return 0.0;
            return 2.0 * a * I(0.0, 1.0, [&](double u) {
                return P1(1.0 - u) * I(0.0, u, [&](double v) { return kernel(u - v) * f1(v) * ft(v); });
            });
        },
        // d31
        [&] {
            if (noP || noFt) return 0.0;
            return a * a * I(0.0, 1.0, [&](double u) {
                return P1(1.0 - u) * I(1.0 - u, 1.0, [&](double v) {
                    const double top = u + v - 1.0;
                    return P1(1.0 - v) *
                           I(0.0, top, [&](double w) { return kernel(top - w) * ft(w) * ft(w); });
                });
            });
        },
        // d32
        [&] {
            if (noP || noFt) return 0.0;
            return a * I(0.0, 1.0, [&](double u) {
                return P2(1.0 - u) * I(0.0, u, [&](double v) { return kernel(u - v) * ft(v) * ft(v); });
            });
        },
        // n1
        [&] {
            if (noF1) return 0.0;
            return -2.0 * r / pi *
                   I(0.0, 1.0, [&](double u) { return kernel(1.0 - u) * f1(u) * sinc_conv(f1, u); });
        },
        // n2
        [&] {
            if (noP || noF1 || noFt) return 0.0;
            return -2.0 * r * a / pi * I(0.0, 1.0, [&](double u) {
                return P1(1.0 - u) *
                       I(0.0, u, [&](double v) { return kernel(u - v) * ft(v) * sinc_conv(f1, v); });
            });
        },
        // n31
        [&] {
            if (noP || noF1 || noFt) return 0.0;
            return -2.0 * r * a / pi * I(0.0, 1.0, [&](double u) {
                return P1(1.0 - u) *
                       I(0.0, u, [&](double v) { return kernel(u - v) * f1(v) * sinc_conv(ft, v); });
            });
        },
        // n32
        [&] {
            if (noP || noF1 || noFt) return 0.0;
            return -2.0 * r / pi * I(0.0, 1.0, [&](double u) {
                return kernel(1.0 - u) * f1(u) *
                       I(0.0, u, [&](double v) { return sine(v) * P1(v) * ft(u - v); });
            });
        },
        // n41
        [&] {
            if (noP || noFt) return 0.0;
            return -2.0 * r * a * a / pi * I(0.0, 1.0, [&](double u) {
                return P1(1.0 - u) * I(1.0 - u, 1.0, [&](double v) {
                    const double top = u + v - 1.0;
                    return P1(1.0 - v) * I(0.0, top, [&](double w) {
                        return kernel(top - w) * ft(w) * sinc_conv(ft, w);
                    });
                });
            });
        },
        // n42
        [&] {
            if (noP || noFt) return 0.0;
            return -2.0 * r * a / pi * I(0.0, 1.0, [&](double u) {
                return P2(1.0 - u) *
                       I(0.0, u, [&](double v) { return kernel(u - v) * ft(v) * sinc_conv(ft, v); });
            });
        },
        // n43
        [&] {
            if (noP || noFt) return 0.0;
            return -2.0 * r * a / pi * I(0.0, 1.0, [&](double u) {
                return P1(1.0 - u) * I(0.0, u, [&](double v) {
                    return kernel(u - v) * ft(v) *
                           I(0.0, v, [&](double w) { return sine(w) * P1(w) * ft(v - w); });
                });
            });
        },
    };

    std::array<std::future<double>, 11> pending;
    for (std::size_t i = 0; i < jobs.size(); ++i) pending[i] = std::async(std::launch::async, jobs[i]);
    std::array<double, 11> v{};
    for (std::size_t i = 0; i < jobs.size(); ++i) v[i] = pending[i].get() + 0.0;

    return assemble(DenominatorTerms{v[0], v[1], v[2], v[3]},
                    NumeratorTerms{v[4], v[5], v[6], v[7], v[8], v[9], v[10]}, c);
}

DimReduction dimreduct_check(int m, std::span<const int> a, const FracPoly& f_of_log, double D, int order) {
    if (m < 1 || m > 4 || a.size() != static_cast<std::size_t>(m)) {
        throw DomainError("dimreduct_check: need 1 <= m <= 4 exponents");
    }
    if (!(D > 1.0)) throw DomainError("dimreduct_check: D must exceed 1");
    for (int ai : a) {
        if (ai < 1) throw DomainError("dimreduct_check: exponents must be positive integers");
    }
    const Integrator I(order);
    const double L = std::log(D);

    // In t_i = log x_i: nested simplex integral of prod t_i^{a_i-1} g(sum t + s).
    std::function<double(int, double, double)> nest = [&](int level, double used, double budget) -> double {
        if (level == m) {
            return I(0.0, budget, [&](double s) { return f_of_log(used + s); });
        }
        const int power = a[static_cast<std::size_t>(level)] - 1;
        return I(0.0, budget, [&](double t) {
            return std::pow(t, power) * nest(level + 1, used + t, budget - t);
        });
    };

    DimReduction out;
    out.lhs = nest(0, 0.0, L);

    int total = 0;
    double log_prefactor = 0.0;
    for (int ai : a) {
        total += ai;
        log_prefactor += std::lgamma(static_cast<double>(ai));
    }
    log_prefactor -= std::lgamma(total + 1.0);
    out.rhs = std::exp(log_prefactor) *
              I(0.0, L, [&](double x) { return f_of_log(x) * std::pow(x, total); });
    return out;
}

}  // namespace mogap::quad

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mogap/fracpoly.hpp"
#include "mogap/hfunc.hpp"
#include "mogap/scheme.hpp"

namespace mogap::quad {

// Gauss-Legendre rule on [-1, 1].
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;
};

// Newton iteration on P_n; 2 <= order <= 128.
QuadRule gauss_legendre(int order);

// Gauss-Legendre on [lo, hi] composed with the endpoint-clustering map
// x = lo + (hi - lo) I_t(m, m), I the regularized incomplete Beta function.
// The Jacobian vanishes like t^{m-1} (1-t)^{m-1}, which flattens algebraic
// endpoint singularities x^alpha into t^{m(alpha+1)-1}.
class Integrator {
public:
    explicit Integrator(int order, int clustering = 4);

    int order() const { return order_; }

    template <class F>
    double operator()(double lo, double hi, F&& f) const {
        const double len = hi - lo;
        if (len == 0.0) return 0.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < x_.size(); ++i) sum += w_[i] * f(lo + len * x_[i]);
        return sum * len;
    }

private:
    int order_;
    std::vector<double> x_;
    std::vector<double> w_;
};

inline constexpr int kDefaultOrder = 48;

// Every component of the h-ratio by nested quadrature of its defining
// (u, v, w, z) integral. order >= 16.
HBreakdown h_value_numeric(const CoeffScheme& scheme, double c, int order = kDefaultOrder);

struct DimReduction {
    double lhs = 0.0;
    double rhs = 0.0;
};

// Both sides of the nested-logarithm reduction
//
//   int_1^D log^{a1-1}x1 dx1/x1 ... int_1^{D/(x1..xm)} f(x1..xm x) dx/x
//     = prod (a_i - 1)! / (sum a_i)! * int_1^D f(x) log^{sum a_i} x dx/x,
//
// with f given as a polynomial in log x. Requires 1 <= m <= 4.
DimReduction dimreduct_check(int m, std::span<const int> a, const FracPoly& f_of_log, double D,
                             int order = 32);

}  // namespace mogap::quad

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mogap/errors.hpp"
#include "mogap/fracpoly.hpp"
#include "mogap/quadcheck.hpp"

using namespace mogap;

namespace {

const FracPoly kRow1F1 = FracPoly::from_coefficients(std::vector<double>{1.95, 1.47, -1.07, -0.29});

FracPoly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (double& x : c) x = unit(rng);
    return FracPoly::from_coefficients(c);
}

}  // namespace

TEST_CASE("make normalizes terms") {
    const std::vector<std::pair<double, double>> dup{{1, 0}, {1, 0}};
    const FracPoly two = make(dup);
    REQUIRE(two.size() == 1);
    CHECK(two.terms()[0].coef == 2.0);
    CHECK(two.terms()[0].exponent == 0.0);

    const std::vector<std::pair<double, double>> zero{{0, 3}};
    CHECK(make(zero).is_zero());

    const std::vector<std::pair<double, double>> row1{{1.95, 0}, {1.47, 1}, {-1.07, 2}, {-0.29, 3}};
    CHECK(make(row1) == kRow1F1);

    const std::vector<std::pair<double, double>> unsorted{{3.0, 2.5}, {1.0, 0.5}, {2.0, 0.5 + 1e-12}};
    const FracPoly p = make(unsorted);
    REQUIRE(p.size() == 2);
    CHECK(p.terms()[0].coef == 3.0);
    CHECK(p.terms()[1].exponent == 2.5);
}

TEST_CASE("negative exponents are rejected") {
    const std::vector<std::pair<double, double>> bad{{1.0, -0.5}};
    CHECK_THROWS_AS(make(bad), DomainError);
}

TEST_CASE("eval") {
    CHECK(kRow1F1(0.0) == 1.95);
    CHECK(FracPoly{}(0.7) == 0.0);
    CHECK(kRow1F1(1.0) == doctest::Approx(2.06).epsilon(1e-15));
    // 0^0 = 1
    CHECK(FracPoly::constant(3.0)(0.0) == 3.0);
}

TEST_CASE("add and scale") {
    const FracPoly x = FracPoly::monomial(1.0, 1.0);
    CHECK(add(x, scale(x, -1.0)).is_zero());
    CHECK(scale(FracPoly::monomial(1.0, 2.0), 2.0)(1.0) == 2.0);
    const FracPoly y = FracPoly::monomial(1.0, 1.3924);
    const FracPoly sum = add(y, y);
    REQUIRE(sum.size() == 1);
    CHECK(sum.terms()[0].coef == 2.0);
    CHECK(sum.terms()[0].exponent == 1.3924);
}

TEST_CASE("mul") {
    const FracPoly one_plus_x = FracPoly::from_coefficients(std::vector<double>{1, 1});
    const FracPoly one_minus_x = FracPoly::from_coefficients(std::vector<double>{1, -1});
    CHECK(mul(one_plus_x, one_minus_x) == FracPoly::from_coefficients(std::vector<double>{1, 0, -1}));

    const FracPoly prod = mul(FracPoly::monomial(1.0, 0.3924), FracPoly::monomial(1.0, 1.0));
    REQUIRE(prod.size() == 1);
    CHECK(prod.terms()[0].exponent == doctest::Approx(1.3924).epsilon(1e-15));

    CHECK(mul(kRow1F1, kRow1F1)(0.0) == doctest::Approx(3.8025).epsilon(1e-15));
}

TEST_CASE("property: eval of product is product of evals") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> x01(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const FracPoly p = random_poly(rng, 6);
        const FracPoly q = random_poly(rng, 6);
        const double x = x01(rng);
        const double lhs = mul(p, q)(x);
        const double rhs = p(x) * q(x);
        // relative to the term magnitudes, which bound the cancellation
        double scale = 0.0;
        for (const auto& s : p.terms()) {
            for (const auto& t : q.terms()) scale += std::abs(s.coef * t.coef);
        }
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(scale, 1e-300));
    }
}

TEST_CASE("compose_one_minus") {
    const FracPoly x = FracPoly::monomial(1.0, 1.0);
    CHECK(compose_one_minus(x) == FracPoly::from_coefficients(std::vector<double>{1, -1}));
    CHECK(compose_one_minus(FracPoly::monomial(1.0, 2.0)) == FracPoly::from_coefficients(std::vector<double>{1, -2, 1}));

    const FracPoly p1 = FracPoly::from_coefficients(std::vector<double>{0, 1, 0.036});
    const auto d = compose_one_minus(p1).dense_coefficients();
    REQUIRE(d.size() == 3);
    CHECK(d[0] == doctest::Approx(1.036).epsilon(1e-15));
    CHECK(d[1] == doctest::Approx(-1.072).epsilon(1e-15));
    CHECK(d[2] == doctest::Approx(0.036).epsilon(1e-15));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> x01(0.0, 1.0);
    for (int i = 0; i < 5; ++i) {
        const double t = x01(rng);
        CHECK(compose_one_minus(p1)(t) == doctest::Approx(p1(1.0 - t)).epsilon(1e-14));
    }

    CHECK_THROWS_AS(compose_one_minus(FracPoly::monomial(1.0, 0.5)), DomainError);
}

TEST_CASE("property: compose_one_minus is an involution") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const FracPoly p = random_poly(rng, 7);
        const auto back = compose_one_minus(compose_one_minus(p)).dense_coefficients();
        const auto orig = p.dense_coefficients();
        REQUIRE(back.size() <= orig.size());
        for (std::size_t i = 0; i < orig.size(); ++i) {
            const double b = i < back.size() ? back[i] : 0.0;
            CHECK(std::abs(b - orig[i]) < 1e-12);
        }
    }
}

TEST_CASE("beta_convolve closed forms") {
    const FracPoly one = FracPoly::constant(1.0);
    const FracPoly u = beta_convolve(1.0, one);
    REQUIRE(u.size() == 1);
    CHECK(u.terms()[0].exponent == 1.0);
    CHECK(u.terms()[0].coef == doctest::Approx(1.0).epsilon(1e-15));

    const FracPoly half_u2 = beta_convolve(2.0, one);
    REQUIRE(half_u2.size() == 1);
    CHECK(half_u2.terms()[0].exponent == 2.0);
    CHECK(half_u2.terms()[0].coef == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(beta_convolve(0.0, one), DomainError);
    CHECK_THROWS_AS(beta_convolve(-1.0, one), DomainError);
}

TEST_CASE("beta_convolve against quadrature, a = 1.3924") {
    const double a = 1.3924;
    const FracPoly conv = beta_convolve(a, FracPoly::monomial(1.0, 1.0));
    REQUIRE(conv.size() == 1);
    CHECK(conv.terms()[0].exponent == doctest::Approx(2.3924).epsilon(1e-15));
    const quad::Integrator I(64, 6);
    for (double uu : {0.25, 0.5, 1.0}) {
        const double q = I(0.0, uu, [&](double v) { return std::pow(uu - v, a - 1.0) * v; });
        CHECK(std::abs(conv(uu) - q) <= 1e-12 * std::abs(q));
    }
}

TEST_CASE("property: beta_convolve matches quadrature for random a and p") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> adist(0.5, 3.0);
    const quad::Integrator I(64, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const double a = adist(rng);
        const FracPoly p = random_poly(rng, 6);
        const FracPoly conv = beta_convolve(a, p);
        for (double uu : {0.1, 0.5, 1.0}) {
            const double q = I(0.0, uu, [&](double v) { return std::pow(uu - v, a - 1.0) * p(v); });
            // scale: the same integral of |p| termwise
            double mag = 0.0;
            for (const auto& t : p.terms()) mag += std::abs(t.coef) * beta(a, t.exponent + 1.0) * std::pow(uu, a + t.exponent);
            CHECK(std::abs(conv(uu) - q) <= 1e-10 * std::max(std::abs(q), 1e-3 * mag));
        }
    }
}

TEST_CASE("convolve matches quadrature") {
    const FracPoly g = FracPoly::from_coefficients(std::vector<double>{0.3, -1.0, 2.0});
    const FracPoly q = FracPoly::from_coefficients(std::vector<double>{1.0, 0.5, 0.0, -0.25});
    const quad::Integrator I(32);
    for (double uu : {0.2, 0.7, 1.0}) {
        const double num = I(0.0, uu, [&](double v) { return g(v) * q(uu - v); });
        CHECK(convolve(g, q)(uu) == doctest::Approx(num).epsilon(1e-13));
    }
}

TEST_CASE("integrate_weighted") {
    const FracPoly one = FracPoly::constant(1.0);
    CHECK(integrate_weighted(1.3924, one) == doctest::Approx(1.0 / 1.3924).epsilon(1e-14));
    CHECK(integrate_weighted(1.3924, one) == doctest::Approx(0.71818).epsilon(1e-5));
    CHECK(integrate_weighted(1.0, FracPoly::monomial(1.0, 1.0)) == 0.5);
    CHECK(integrate_weighted(2.0, FracPoly::monomial(1.0, 1.0)) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK_THROWS_AS(integrate_weighted(0.0, one), DomainError);
}

TEST_CASE("property: integrate_weighted(1, p) is the termwise sum c/(e+1)") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> unit(-1.0, 1.0), ex(0.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Term> terms;
        for (int k = 0; k < 5; ++k) terms.push_back({unit(rng), ex(rng)});
        const FracPoly p(terms);
        double expected = 0.0;
        for (const auto& t : p.terms()) expected += t.coef / (t.exponent + 1.0);
        CHECK(integrate_weighted(1.0, p) == expected);
    }
}

TEST_CASE("sinc_series") {
    const double c = 0.515398;
    CHECK(sinc_series(c)(0.0) == doctest::Approx(std::numbers::pi * c).epsilon(1e-15));
    CHECK(sinc_series(c)(0.0) == doctest::Approx(1.61917).epsilon(1e-5));
    CHECK(std::abs(sinc_series(0.5)(1.0) - 1.0) <= sinc_truncation_bound(0.5, kDefaultSeriesTerms) + 1e-15);
    CHECK(sinc_truncation_bound(0.52, 24) < 1e-18);
    CHECK(sinc_truncation_bound(0.7, 24) < 1e-18);
    CHECK_THROWS_AS(sinc_series(0.5, 0), DomainError);
}

TEST_CASE("property: sinc_series(c, 24) matches sin(pi c v)/v on (0, 1]") {
    for (double c = 0.4; c <= 0.6 + 1e-12; c += 0.05) {
        const FracPoly s = sinc_series(c, 24);
        for (int i = 1; i <= 100; ++i) {
            const double v = i / 100.0;
            CHECK(std::abs(s(v) - std::sin(std::numbers::pi * c * v) / v) <= 1e-15);
        }
    }
}

TEST_CASE("sin_series") {
    CHECK(sin_series(0.5)(0.0) == 0.0);
    CHECK(std::abs(sin_series(0.5)(1.0) - 1.0) <= 1e-15);
    CHECK(sin_series(0.53) == mul(FracPoly::monomial(1.0, 1.0), sinc_series(0.53)));
}

TEST_CASE("divide_by_x") {
    const FracPoly p = FracPoly::from_coefficients(std::vector<double>{0, 0, 1, 0.036});
    CHECK(divide_by_x(p) == FracPoly::from_coefficients(std::vector<double>{0, 1, 0.036}));
    CHECK_THROWS_AS(divide_by_x(FracPoly::constant(1.0)), DomainError);
}

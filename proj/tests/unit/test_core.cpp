#include "doctest.h"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/function1d.hpp"
#include "funkineq/core/measure.hpp"
#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"
#include "funkineq/core/special.hpp"

#include <cmath>

using namespace funkineq;
using doctest::Approx;

TEST_SUITE("core") {

TEST_CASE("normal distribution values")
{
    CHECK(normal_cdf(1.0) == Approx(0.8413447460685429).epsilon(1e-15));
    CHECK(normal_cdf(0.0) == 0.5);
    // erfc(10/sqrt 2)/2
    CHECK(normal_sf(10.0) / 7.619853024160527e-24 == Approx(1.0).epsilon(1e-12));
    CHECK(normal_quantile(0.975) == Approx(1.959963984540054).epsilon(1e-13));
    for (double p : {1e-12, 0.01, 0.3, 0.5, 0.9, 1 - 1e-9})
        CHECK(normal_cdf(normal_quantile(p)) == Approx(p).epsilon(1e-12));
    CHECK(normal_pdf(0.0) == Approx(1 / std::sqrt(2 * kPi)));
}

TEST_CASE("Mills ratio")
{
    CHECK(mills_ratio(0.0) == Approx(kSqrtHalfPi).epsilon(1e-14));
    // H(r) ~ 1/r for large r
    CHECK(mills_ratio(50.0) * 50.0 == Approx(1 - 1 / 2500.0).epsilon(1e-6));
    MillsSup s = mills_sup();
    CHECK(s.value == Approx(kSqrtHalfPi).epsilon(1e-12));
    CHECK(s.argmax == Approx(0.0));
    CHECK(s.monotone);
}

TEST_CASE("Poisson pmf, tail and truncation")
{
    CHECK(poisson_pmf(2.0, 3) == Approx(std::exp(-2.0) * 8 / 6).epsilon(1e-14));
    CHECK(poisson_tail(1.0, 0) == Approx(1 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(poisson_truncation(1.0) == 50);
    CHECK(poisson_truncation(100.0) == 300);
    CHECK(log_factorial(10) == Approx(std::log(3628800.0)).epsilon(1e-14));
}

TEST_CASE("Stirling bounds")
{
    for (long n : {1L, 2L, 5L, 10L, 100L, 1000L}) {
        StirlingReport r = stirling_bounds_check(n);
        CHECK(r.pass);
        CHECK(r.slack_lower >= 0);
        CHECK(r.slack_upper >= 0);
    }
}

TEST_CASE("root finding and maximization")
{
    auto cube = [](double x) { return x * x * x; };
    CHECK(solve_increasing(cube, 8.0, 0.0, 1.0) == Approx(2.0).epsilon(1e-14));
    auto z = sign_changes([](double x) { return std::sin(x); }, 1.0, 10.0);
    REQUIRE(z.size() == 3);
    for (int k = 0; k < 3; ++k)
        CHECK(z[k] == Approx((k + 1) * kPi).epsilon(1e-12));
    Argmax m = grid_max([](double x) { return -(x - 1.3) * (x - 1.3); }, -5, 5);
    CHECK(m.x == Approx(1.3).epsilon(1e-9));
    Argmax g = golden_max([](double x) { return std::sin(x); }, 0, 3);
    // a flat top pins x only to about sqrt(eps)
    CHECK(g.x == Approx(kPi / 2).epsilon(1e-7));
    CHECK(g.value == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quadrature schemes")
{
    QuadratureConfig q;
    CHECK(integrate([](double x) { return x * x; }, 0, 1, q).value == Approx(1.0 / 3).epsilon(1e-14));
    CHECK(integrate_line([](double x) { return std::exp(-x * x / 2); }, -INFINITY, INFINITY, q).value ==
          Approx(std::sqrt(2 * kPi)).epsilon(1e-12));
    for (Scheme s : {Scheme::adaptive_simpson, Scheme::tanh_sinh, Scheme::gauss_kronrod}) {
        QuadratureConfig c;
        c.scheme = s;
        CHECK(integrate([](double x) { return std::sqrt(x); }, 0, 1, c).value ==
              Approx(2.0 / 3).epsilon(1e-8));
    }
    CHECK(parse_scheme(scheme_name(Scheme::tanh_sinh)) == Scheme::tanh_sinh);
    // overflow-safe log integral
    LogIntegral l = integrate_log([](double x) { return 800 - x * x / 2; }, -INFINITY, INFINITY, q);
    CHECK(l.log_value == Approx(800 + 0.5 * std::log(2 * kPi)).epsilon(1e-13));
}

TEST_CASE("Gauss-Hermite rule")
{
    GaussHermiteRule r = gauss_hermite_rule(20);
    CHECK(r.weights.sum() == Approx(1.0).epsilon(1e-13));
    double m4 = 0;
    for (int i = 0; i < 20; ++i)
        m4 += r.weights[i] * std::pow(r.nodes[i], 4);
    CHECK(m4 == Approx(3.0).epsilon(1e-12));
}

TEST_CASE("measures")
{
    QuadratureConfig q;
    auto g = MeasureSpec::gaussian();
    CHECK(weighted_integral([](double x) { return std::exp(x); }, g, q).value ==
          Approx(std::exp(0.5)).epsilon(1e-12));
    CHECK(log_exp_moment([](double x) { return x; }, g, q).log_value == Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(log_exp_moment([](double x) { return x * x; }, g, q), NonFiniteIntegrand);

    auto s = MeasureSpec::subgaussian(1.5);
    CHECK(weighted_integral([](double) { return 1.0; }, s, q).value == Approx(1.0).epsilon(1e-12));
    // Z_p = 2 Gamma(1 + 1/p)
    CHECK(s.normalization() == Approx(2 * std::tgamma(1 + 1 / 1.5)).epsilon(1e-10));

    // e^{-x^2/2} dgamma is N(0, 1/2)
    auto t = MeasureSpec::tilted(Function1D([](double x) { return x * x / 2; }, [](double x) { return x; }));
    CHECK(weighted_integral([](double x) { return x * x; }, t, q).value == Approx(0.5).epsilon(1e-10));

    auto h = Function1D([](double x) { return 1 + 0.5 * std::cos(x); }, [](double x) { return -0.5 * std::sin(x); });
    CHECK_NOTHROW(MeasureSpec::perturbed(g, h, 0.5, 1.5));
    CHECK_THROWS_AS(MeasureSpec::perturbed(g, h, 0.8, 1.5), DomainError);

    CHECK(halfline_integral([](double) { return 1.0; }, q).value == Approx(kSqrtHalfPi).epsilon(1e-13));
    CHECK(halfline_integral([](double x) { return x; }, q).value == Approx(1.0).epsilon(1e-13));
}

TEST_CASE("Function1D helpers")
{
    Function1D s([](double x) { return std::sin(x); }, [](double x) { return std::cos(x); });
    CHECK(derivative_defect(s, -5, 5) < 1e-6);
    Function1D bad([](double x) { return std::sin(x); }, [](double x) { return 2 * std::cos(x); });
    CHECK(derivative_defect(bad, -5, 5) > 0.1);
    CHECK(s.plus(1)(0) == Approx(1.0));
    CHECK(s.times(3).deriv(0) == Approx(3.0));
    CHECK(s.affine_arg(2, 1).deriv(0) == Approx(2 * std::cos(1.0)));
    CHECK(s.second(0.3) == Approx(-std::sin(0.3)).epsilon(1e-6));
    CHECK(Function1D::identity()(2.5) == 2.5);
}

TEST_CASE("report settling")
{
    InequalityReport r;
    r.lhs = 1.0;
    r.rhs = 1.0 - 5e-7;
    r.settle();
    CHECK(r.margin == Approx(-5e-7));
    CHECK(r.satisfied);
    r.rhs = 0.9;
    r.settle();
    CHECK_FALSE(r.satisfied);
    r.set_vacuous();
    CHECK(r.satisfied);
    CHECK(r.vacuous);
}

}

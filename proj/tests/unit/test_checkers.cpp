#include "doctest.h"

#include "funkineq/checkers/checkers.hpp"
#include "funkineq/checkers/falsify.hpp"
#include "funkineq/checkers/families.hpp"
#include "funkineq/checkers/pipeline.hpp"
#include "funkineq/checkers/transfer.hpp"
#include "funkineq/core/errors.hpp"
#include "funkineq/core/measure.hpp"
#include "funkineq/core/special.hpp"

#include <cmath>

using namespace funkineq;
using doctest::Approx;

TEST_SUITE("checkers") {

TEST_CASE("families carry consistent derivatives")
{
    for (const auto& f : default_suite())
        CHECK(derivative_defect(f, -6, 6) < 1e-5);
    CHECK(default_suite().size() >= 10);
    CHECK(family::quadratic_capped(2)(3.0) == Approx(2.0));
    CHECK(make_member({"linear", {{"a", 0.5}}})(2.0) == Approx(1.0));
    CHECK_THROWS_AS(make_member({"no-such-family", {}}), DomainError);
    QuadratureConfig q;
    auto m = mean_normalize(family::quadratic_capped(1));
    CHECK(std::abs(weighted_integral(m, MeasureSpec::gaussian(), q).value) < 1e-12);
}

TEST_CASE("bg and ir on linear functions")
{
    // centered a x: log int e^{ax} dgamma = a^2/2
    auto r = check_bg(family::linear(0.5), 1.0);
    CHECK(r.lhs == Approx(0.125).epsilon(1e-12));
    CHECK(r.satisfied);
    CHECK_THROWS_AS(check_bg(family::linear(0.5), 0.4), DomainError);
    // 10 e^{1/2}/(1 + 1)
    auto i = check_ir(family::linear(1.0));
    CHECK(i.lhs == Approx(0.5).epsilon(1e-12));
    CHECK(i.rhs == Approx(5 * std::exp(0.5)).epsilon(1e-10));
    CHECK(check_ir_sqrt(family::linear(1.0)).satisfied);
}

TEST_CASE("half-line and beta checkers")
{
    CHECK(check_exp_hardy(family::quadratic_capped(3)).satisfied);
    for (double b : {1.3, 1.5, 1.8})
        CHECK(check_beta_hardy(family::sin_scaled(1.0), b).satisfied);
    auto c = check_cmp(family::linear(0.5), 1.5, kappa_cmp(1.5));
    CHECK(c.satisfied);
    CHECK(kappa_cmp(2.0) == Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("abs breaks locate sign changes")
{
    auto b = abs_breaks(family::sin_scaled(1.0));
    bool has_pi = false, has_half_pi = false;
    for (double x : b) {
        has_pi |= std::abs(x - kPi) < 1e-9;
        has_half_pi |= std::abs(x - kPi / 2) < 1e-9;
    }
    CHECK(has_pi);
    CHECK(has_half_pi);
}

TEST_CASE("falsifier")
{
    QuadratureConfig q;
    double N = 3;
    double quad = log_exp_moment(
                      [&](double x) {
                          double a = std::min(std::abs(x), N);
                          return a * a / 2;
                      },
                      MeasureSpec::gaussian(), q, {-N, N})
                      .log_value;
    CHECK(capped_quadratic_log_exp(N) == Approx(quad).epsilon(1e-12));

    auto h = [](double t) {
        double l = std::log(std::exp(1.0) + t);
        return t * l * l;
    };
    auto r = falsify_h(h, {2, 4, 8, 16, 32, 64});
    CHECK(r.strictly_increasing);
    CHECK(r.divergent);
    CHECK(r.rows.back().gap > 2.0);
    CHECK(r.bounds.pass());
    auto s = falsify_h([](double t) { return 1 + t; }, {2, 4, 8, 16, 32, 64});
    CHECK_FALSE(s.divergent);
    for (const auto& row : s.rows)
        CHECK(row.lhs >= std::log(2 * row.N) - 1);
}

TEST_CASE("constants table")
{
    AuditReport a = constants_audit();
    CHECK(a.pass());
    const AuditItem* d = a.find("d");
    REQUIRE(d);
    CHECK(d->computed >= 0.960);
    CHECK(d->computed <= 0.961);
    auto h = HardyReductionConstants::compute();
    CHECK(h.argmax == Approx(std::pow(2.0, 0.25)).epsilon(1e-4));
    CHECK(h.A == Approx(kSqrtHalfPi).epsilon(1e-12));
    CHECK(reduction_G(0.0) == Approx(1.0));
}

TEST_CASE("reduction pipeline")
{
    auto r = reduction_pipeline(family::sin_scaled(1.0));
    CHECK(r.audit.pass());
    CHECK(r.eq13.satisfied);
    CHECK(r.final_bound.satisfied);
    CHECK(reduction_pipeline_check(family::hermite_mix({0.3, 0.2})).satisfied);
}

TEST_CASE("transport and contraction")
{
    // e^{-x^2/2} dgamma = N(0, 1/2): T(x) = x / sqrt 2
    auto half = MeasureSpec::tilted(Function1D([](double x) { return x * x / 2; }, [](double x) { return x; }));
    Transport1D t = monotone_transport(half);
    CHECK(t.lipschitz == Approx(1 / std::sqrt(2.0)).epsilon(1e-6));
    for (long i = 0; i < t.x.size(); i += 50)
        CHECK(t.T[i] == Approx(t.x[i] / std::sqrt(2.0)).epsilon(1e-6));
    CHECK(contraction_transfer_1d(half, BaseInequality::ir(), family::sin_scaled(1.0)).satisfied);
    // e^{x^2/4} dgamma = N(0, 2): T = sqrt 2 x is not a contraction
    auto wide = MeasureSpec::tilted(Function1D([](double x) { return -x * x / 4; }, [](double x) { return -x / 2; }));
    CHECK_THROWS_AS(contraction_transfer_1d(wide, BaseInequality::ir(), family::sin_scaled(1.0)), NotLogConcave);
}

TEST_CASE("Holley-Stroock and median variants")
{
    Function1D h([](double x) { return 1 + 0.5 * std::cos(x); }, [](double x) { return -0.5 * std::sin(x); });
    CHECK(holley_stroock_transfer(BaseInequality::ir(), h, 0.5, 1.5, family::sin_scaled(1.0)).satisfied);
    // the median of chi-square with one degree of freedom
    Function1D sq([](double x) { return x * x; }, [](double x) { return 2 * x; });
    CHECK(maximal_median(sq) == Approx(0.454936423119573).epsilon(1e-6));
    CHECK(maximal_median(Function1D::identity()) == Approx(0.0).scale(1).epsilon(1e-9));
    CHECK(median_variant_check(family::sin_scaled(1.0)).satisfied);
}

}

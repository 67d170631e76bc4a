#include "doctest.h"

#include "funkineq/core/errors.hpp"
#include "funkineq/semigroup/exponent.hpp"
#include "funkineq/semigroup/semigroup.hpp"
#include "funkineq/semigroup/theorems.hpp"

#include <cmath>

using namespace funkineq;
using doctest::Approx;

namespace {
Function1D sq()
{
    Function1D f([](double x) { return x * x; }, [](double x) { return 2 * x; });
    f.with_second([](double) { return 2.0; });
    return f;
}
Function1D sine()
{
    Function1D f([](double x) { return std::sin(x); }, [](double x) { return std::cos(x); });
    f.with_second([](double x) { return -std::sin(x); });
    return f;
}
}

TEST_SUITE("semigroup") {

TEST_CASE("Mehler formula against closed forms")
{
    QuadratureConfig q;
    CHECK(mehler_apply(Function1D::identity(), 1.0, 2.0, q) == Approx(2 * std::exp(-1.0)).epsilon(1e-13));
    // P_t x^2 = e^{-2t} x^2 + (1 - e^{-2t})/rho
    CHECK(mehler_apply(sq(), 0.5, 1.0, q) == Approx(1.0).epsilon(1e-13));
    CHECK(mehler_apply(sq(), 0.5, 1.0, q, 2.0) ==
          Approx(std::exp(-2.0) + (1 - std::exp(-2.0)) / 2).epsilon(1e-13));
    Function1D ex([](double x) { return std::exp(x); }, [](double x) { return std::exp(x); });
    CHECK(mehler_apply(ex, 0.3, 0.0, q) == Approx(std::exp(-std::expm1(-0.6) / 2)).epsilon(1e-13));
    // P_t sin(x) = e^{-(1 - e^{-2t})/2} sin(e^{-t} x)
    double t = 0.7, x = 1.1;
    CHECK(mehler_apply(sine(), t, x, q) ==
          Approx(std::exp(-(1 - std::exp(-2 * t)) / 2) * std::sin(std::exp(-t) * x)).epsilon(1e-12));
}

TEST_CASE("semigroup property and ergodicity")
{
    QuadratureConfig q;
    auto f = sine();
    double direct = mehler_apply(f, 0.9, 0.4, q);
    double nested = mehler_apply([&](double z) { return mehler_apply(f, 0.6, z, q); }, 0.3, 0.4, q);
    CHECK(std::abs(direct - nested) <= 1e-10);
    CHECK(std::abs(mehler_apply(f, 20.0, 1.0, q)) <= 1e-6);
}

TEST_CASE("commutation and generator")
{
    std::vector<double> grid{-2, -1, 0, 1, 2};
    for (const auto& f : {Function1D::identity(), sq(), sine()})
        for (double t : {0.3, 1.0})
            CHECK(commutation_check(f, t, grid).pass());
    CHECK(ou_generator(sq(), 1.5) == Approx(2 - 2 * 1.5 * 1.5));
    CHECK(gamma_of(sine(), 0.0) == Approx(1.0));
}

TEST_CASE("local LSI is an equality for exponentials")
{
    Function1D eh([](double x) { return std::exp(x / 2); }, [](double x) { return std::exp(x / 2) / 2; });
    auto r = local_lsi_check(eh, 1.0, 0.0);
    double s = 1 - std::exp(-2.0);
    CHECK(r.lhs == Approx(s / 2 * std::exp(s / 2)).epsilon(1e-10));
    CHECK(r.rhs == Approx(r.lhs).epsilon(1e-10));
    CHECK(r.satisfied);
}

TEST_CASE("hypercontractivity functional is non-increasing")
{
    std::vector<double> s;
    for (int i = 0; i < 10; ++i)
        s.push_back(0.9 * i / 9);
    CHECK(hypercontractivity_monotonicity_check(sine().times(0.5), 1.0, 1.0, s).pass());
    QuadratureConfig q;
    CHECK_THROWS_AS(hypercontractivity_psi(sine(), 1.0, 1.0, 1.0, q), DomainError);
}

TEST_CASE("exponent c_alpha")
{
    CHECK(c_alpha({1, 1, 1}) == Approx(0.518409697483482).epsilon(1e-14));
    // t -> infinity: (1/(2x)) log((x+1)/(x-1)), x = sqrt(2 rho alpha)
    double x = std::sqrt(2.0);
    CHECK(c_alpha_limit(1, 1) == Approx(std::log((x + 1) / (x - 1)) / (2 * x)).epsilon(1e-14));
    CHECK(c_alpha({1, 1, 50}) == Approx(c_alpha_limit(1, 1)).epsilon(1e-12));
    CHECK(ExponentParams::alpha_threshold(1, 1) == Approx(0.5 * (1 - std::exp(-2.0))).epsilon(1e-12));
    CHECK_FALSE(ExponentParams{0.1, 1, 1}.admissible());
    CHECK_THROWS_AS(c_alpha({0.1, 1, 1}), DomainError);
}

TEST_CASE("integral identity and exponent chain")
{
    for (double rho : {0.5, 2.0})
        for (double t : {0.5, 2.0}) {
            auto r = integral_identity_check(rho, 2.0, t);
            CHECK(r.pass);
            CHECK(r.rel_diff <= 1e-9);
        }
    CHECK(exponent_chain_check().pass());
}

TEST_CASE("exponential inequalities on the Gaussian")
{
    auto half = Function1D::identity().times(0.5);
    auto g = theorem_bg_global_check(half, 1.0);
    CHECK(g.lhs == Approx(0.125).epsilon(1e-12));
    CHECK(g.satisfied);
    for (double t : {0.5, 1.0})
        CHECK(theorem_bg_check(sine().times(0.5), t, 1.0, 0.0).satisfied);
    auto c = cmp_lf_check(Function1D::identity(), 1.0);
    CHECK(c.lhs == Approx(0.5).epsilon(1e-12));
    CHECK(c.satisfied);
    CHECK(cmp_lf_abs_check(Function1D::identity(), 1.0).satisfied);
}

TEST_CASE("modified LSI conclusion on sub-Gaussian laws")
{
    // p = 2 is N(0, 1/2): log int e^{0.3 x} = 0.0225
    auto m = modified_lsi_conclusion_check(2.0, Function1D::identity().times(0.3), 2.0, 1.0);
    CHECK(m.lhs == Approx(0.0225).epsilon(1e-10));
    CHECK(m.satisfied);
    CHECK(modified_lsi_conclusion_check(1.5, Function1D::identity().times(0.3), 2.0, 1.0).satisfied);
}

}

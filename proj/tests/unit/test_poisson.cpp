#include "doctest.h"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/special.hpp"
#include "funkineq/poisson/chain.hpp"
#include "funkineq/poisson/g_lambda.hpp"
#include "funkineq/poisson/poisson_checks.hpp"

#include <cmath>
#include <numeric>

using namespace funkineq;
using doctest::Approx;

namespace {
const double kE = std::exp(1.0);
DiscreteFunction ident(long K)
{
    return DiscreteFunction::tabulate([](long k) { return static_cast<double>(k); }, K,
                                      DiscreteFunction::Tail::linear, 1.0, "k");
}
}

TEST_SUITE("poisson") {

TEST_CASE("discrete functions")
{
    auto f = ident(20);
    CHECK(f.K() == 20);
    CHECK(f(25) == Approx(25.0));
    CHECK(f.grad(30) == Approx(1.0));
    CHECK(f.shifted(-3)(5) == Approx(2.0));
    auto c = DiscreteFunction::tabulate([](long k) { return k < 3 ? 0.0 : 1.0; }, 20,
                                        DiscreteFunction::Tail::constant, 0, "step");
    CHECK(c(100) == 1.0);
    CHECK_THROWS_AS(ident(5), DomainError);
}

TEST_CASE("M/M/infinity generator")
{
    ChainSpec c = ChainSpec::make(2.0);
    CHECK(c.K == poisson_truncation(2.0));
    auto f = ident(c.K);
    for (long k : {0L, 1L, 7L, 30L})
        CHECK(mm_infinity_generator(c, f, k) == Approx(2.0 - k));
    // no birth out of K
    CHECK(mm_infinity_generator(c, f, c.K) == Approx(-static_cast<double>(c.K)));
    CHECK(mm_infinity_generator_full(2.0, f, c.K) == Approx(2.0 - c.K));
    CHECK_THROWS_AS((ChainSpec{2.0, 10}).validate(), DomainError);
}

TEST_CASE("detailed balance")
{
    // pi(3) lambda = pi(4) 4 at lambda = 2
    CHECK(poisson_pmf(2.0, 3) * 2.0 == Approx(poisson_pmf(2.0, 4) * 4.0).epsilon(1e-14));
    CHECK(detailed_balance_defect(2.0, 3) <= 1e-14);
    for (double lambda : {0.5, 1.0, 5.0}) {
        for (long k = 0; k <= 100; ++k)
            CHECK(detailed_balance_defect(lambda, k) <= 1e-12);
        ChainSpec c = ChainSpec::make(lambda);
        CHECK(matrix_balance_defect(c) <= 1e-12);
        auto w = truncated_pmf(c);
        CHECK(std::accumulate(w.begin(), w.end(), 0.0) == Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("generator matrix")
{
    ChainSpec c = ChainSpec::make(1.0);
    auto L = generator_matrix(c);
    CHECK(L.rows() == c.K + 1);
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(c.K + 1);
    CHECK((L * ones).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(L.coeff(0, 1) == Approx(1.0));
    CHECK(L.coeff(3, 2) == Approx(3.0));
}

TEST_CASE("modified log-Sobolev form")
{
    ChainSpec c = ChainSpec::make(1.0);
    auto zero = DiscreteFunction::tabulate([](long) { return 0.0; }, c.K, DiscreteFunction::Tail::constant, 0, "0");
    MlsiForm z = modified_lsi_form(c, zero);
    CHECK(z.entropy == Approx(0.0).scale(1));
    CHECK(z.dirichlet == Approx(0.0).scale(1));
    CHECK(z.quotient == 0.0);
    for (double lambda : {0.5, 1.0, 5.0}) {
        ChainSpec s = ChainSpec::make(lambda);
        for (const auto& f : discrete_suite(s.K)) {
            MlsiForm m = modified_lsi_form(s, f);
            CHECK(m.dirichlet == Approx(2 * m.pairing).epsilon(1e-10));
            CHECK(m.quotient <= 0.5);
            CHECK(m.gradient_quotient <= lambda + 1e-8);
            CHECK_FALSE(m.truncation_warning);
        }
    }
}

TEST_CASE("exponential inequality with |Lf|")
{
    for (double lambda : {0.5, 1.0, 2.0}) {
        ChainSpec c = ChainSpec::make(lambda);
        for (const auto& f : discrete_suite(c.K)) {
            auto r = theorem_51_check(c, f, lambda + 1);
            CHECK(r.satisfied);
            CHECK(r.params.at("constant") == Approx(lambda));
        }
    }
    ChainSpec c = ChainSpec::make(1.0);
    CHECK_THROWS_AS(theorem_51_check(c, ident(c.K), 0.5), DomainError);
    CHECK(theorem_51_check(c, ident(c.K), 1.5, 0.5).params.at("c_lsi_below_sharp") == 1.0);
}

TEST_CASE("G_lambda and its conjugate")
{
    CHECK(g_lambda(1.0, 0.5) == 0.5);
    CHECK(g_lambda_log(1.0, 2.0) == Approx((2 + 2 * std::log(2.0)) * std::exp(2.0)).epsilon(1e-14));
    CHECK(g_lambda(1.0, 1.2) == Approx(269.98).epsilon(1e-4));
    CHECK_THROWS_AS(g_lambda(1.0, 10.0), Overflow);
    CHECK(g_lambda_star(1.0, 0.0) == 0.0);
    CHECK(g_lambda_star(1.0, 0.5) == Approx(0.0).scale(1));
    CHECK(g_lambda_star(1.0, 2.0) == Approx(1.0).epsilon(1e-10));
    CHECK(g_lambda_star(1.0, 100.0) == Approx(99.0).epsilon(1e-10));
    // Fenchel-Young against G on a few points
    for (double x : {0.3, 1.0, 1.1, 1.4})
        for (double y : {0.5, 3.0, 1e4})
            CHECK(x * y <= g_lambda(1.0, x) + g_lambda_star(1.0, y) + 1e-9 * (1 + x * y));
    // at lambda = 1 the sup of x / G is 1, reached on (0, 1]
    CHECK(g_lambda_inverse_ratio(1.0).value == Approx(1.0));
    CHECK(g_lambda_inverse_ratio(0.5).value > 1.0);
}

TEST_CASE("conjugate bound above the empirical k_min")
{
    for (double lambda : {0.5, 1.0, 5.0}) {
        auto r = g_star_bound_check(lambda, 2, 200);
        REQUIRE(r.pass);
        for (const auto& row : r.rows)
            if (row.k >= r.k_min)
                CHECK(row.margin >= 0);
    }
    CHECK(g_star_bound_check(1.0, 2, 200).k_min == 2);
    CHECK_THROWS_AS(g_star_bound_check(1.0, 1, 10), DomainError);
}

TEST_CASE("Phi lemma")
{
    CHECK(phi_o_inverse(phi_o(10.0)) == Approx(10.0).epsilon(1e-12));
    CHECK(phi_o_inverse(kE) == Approx(kE).epsilon(1e-14));
    CHECK(phi_1_inverse(phi_1(50.0)) == Approx(50.0).epsilon(1e-12));
    // Phi_1 maps [e^2, inf) onto [2 e^2 (1 + 1/log 2), inf)
    CHECK(phi_1(kE * kE) == Approx(2 * kE * kE * (1 + 1 / std::log(2.0))).epsilon(1e-14));
    CHECK_THROWS_AS(phi_1_inverse(30.0), DomainError);
    CHECK(phi_lemma_check(phi_default_grid()).pass());
}

TEST_CASE("constants c and d")
{
    PoissonConstants p = constants_cd_estimate(1.0);
    CHECK(p.A == Approx(kE - 1).epsilon(1e-12));
    CHECK(p.sup_ratio == Approx(1.0));
    CHECK(p.d == Approx(kE).epsilon(1e-12));
    CHECK(p.c > 0);
    CHECK(std::isfinite(p.c));
    CHECK(p.tail_bound < 1e-10 * p.series);
    // f = 0: log 1 = 0 <= c
    auto zero = DiscreteFunction::tabulate([](long) { return 0.0; }, 50, DiscreteFunction::Tail::constant, 0, "0");
    CHECK(poisson_exponential_check(p, zero).satisfied);
    for (const auto& f : discrete_suite(poisson_truncation(1.0))) {
        auto g = f.shifted(-f(0));
        CHECK(poisson_exponential_check(p, g).satisfied);
        CHECK(poisson_centered_check(p, f).satisfied);
    }
    CHECK_THROWS_AS(poisson_exponential_check(p, zero.shifted(1.0)), DomainError);
}

}

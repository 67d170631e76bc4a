#include "doctest.h"

#include "funkineq/conjugates/conjugates.hpp"
#include "funkineq/conjugates/weight_triple.hpp"
#include "funkineq/core/errors.hpp"

#include <cmath>

using namespace funkineq;
using doctest::Approx;

TEST_SUITE("conjugates") {

TEST_CASE("weight triple identities")
{
    for (const WeightTriple& t : {WeightTriple::gauss(), WeightTriple::beta(1.3), WeightTriple::beta(1.8)})
        for (double x : {0.5, 1.0, 2.0, 4.0}) {
            CHECK(t.W(x) == Approx(t.V(x) + std::log(t.Vp(x))).epsilon(1e-12));
            CHECK(t.G(x) == Approx(std::exp(t.V(x))));
        }
    auto g = WeightTriple::gauss();
    for (double x : {0.5, 2.0})
        CHECK(g.W(x) == Approx(x * x / 2 + std::log(g.H(x))).epsilon(1e-12));
    CHECK(kappa_beta(2.0) == Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c_beta(1.5) == Approx(20 - std::log(2.5 - std::sqrt(5.0))).epsilon(1e-14));
}

TEST_CASE("inverse functions")
{
    auto g = WeightTriple::gauss();
    double x0 = w_inverse(g, 0.0);
    CHECK(x0 > 1.05);
    CHECK(x0 < 1.06);
    CHECK(g.W(x0) == Approx(0.0).epsilon(1e-12));
    double a0 = h_inverse(g, 1.0);
    CHECK(a0 > 2.13);
    CHECK(a0 < 2.14);
    CHECK_THROWS_AS(w_inverse(g, -1e6), RangeError);
}

TEST_CASE("closed-form conjugate matches the numeric sup")
{
    for (const WeightTriple& t : {WeightTriple::gauss(), WeightTriple::beta(1.3), WeightTriple::beta(1.8)}) {
        auto G = [&](double x) { return t.G(x); };
        for (double y : {1.0, 3.0, 100.0, 1e5, 1e8}) {
            double c = g_star_closed(t, y);
            CHECK(g_star_numeric(G, y) == Approx(c).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(g_star_closed(WeightTriple::gauss(), 0.0), RangeError);
}

TEST_CASE("numeric conjugate of a quadratic")
{
    auto half_sq = [](double x) { return x * x / 2; };
    CHECK(g_star_numeric(half_sq, 3.0) == Approx(4.5).epsilon(1e-12));
    CHECK_THROWS_AS(g_star_numeric([](double x) { return x; }, 2.0), Unbounded);
}

TEST_CASE("lemma audits")
{
    CHECK(technical_lemma_audit().pass());
    for (double b : {1.3, 1.5, 1.8}) {
        CHECK(preparation_lemma_audit(b).pass());
        double w = w_critical(b);
        CHECK(w >= 1.0 / 3);
        CHECK(w <= 0.5);
    }
    CHECK(technical_I(4.0) >= 0.228);
}

TEST_CASE("Fenchel-Young")
{
    auto g = WeightTriple::gauss();
    std::vector<std::pair<double, double>> s;
    for (double x : {0.1, 1.0, 2.5})
        for (double y : {0.5, 5.0, 500.0})
            s.push_back({x, y});
    CHECK(fenchel_young_check([&](double x) { return g.G(x); }, s).pass());
}

TEST_CASE("log grid")
{
    auto v = log_grid(1.0, 1000.0, 4);
    REQUIRE(v.size() == 4);
    CHECK(v[1] == Approx(10.0));
    CHECK(v[3] == 1000.0);
}

}

#include "funkineq/rearrangement/hardy.hpp"

#include "funkineq/core/measure.hpp"
#include "funkineq/core/special.hpp"

#include <algorithm>
#include <cmath>

namespace funkineq {

double hardy_constant_gaussian() { return mills_sup().value; }

PoissonHardy hardy_constant_poisson(double lambda)
{
    long K = std::max(poisson_truncation(lambda), 200L);
    PoissonHardy best{-1, 0};
    for (long k = 0; k <= K; ++k) {
        // tail(k)/pi(k) = sum_{j>=1} prod_{i=1}^j lambda/(k+i)
        double term = 1, s = 0;
        for (long j = 1; j < 100000; ++j) {
            term *= lambda / static_cast<double>(k + j);
            s += term;
            if (term < 1e-17 * s)
                break;
        }
        if (s > best.value)
            best = {s, k};
    }
    return best;
}

InequalityReport hardy_l1_check(const Function1D& g, const QuadratureConfig& q)
{
    double g0 = g(0.0);
    auto ks = g.kinks();
    double lhs = halfline_integral([&](double x) { return std::abs(g(x) - g0); }, q, ks).value;
    double grad = halfline_integral([&](double x) { return std::abs(g.deriv(x)); }, q, ks).value;
    double A = hardy_constant_gaussian();
    InequalityReport r;
    r.inequality_id = "hardy-l1";
    r.lhs = lhs / std::sqrt(2 * kPi);
    r.rhs = A * grad / std::sqrt(2 * kPi);
    r.params["A"] = A;
    r.function_tag = g.tag().str();
    return r.settle();
}

} // namespace funkineq

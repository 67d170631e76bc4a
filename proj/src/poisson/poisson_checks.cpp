#include "funkineq/poisson/poisson_checks.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/special.hpp"
#include "funkineq/poisson/g_lambda.hpp"
#include "funkineq/rearrangement/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace funkineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long kTailExtra = 400;
// past K(lambda) + 200: the (log n)^3 / n^2 comparison, 3 from the 3/(k log k) term
constexpr long kExactBeyondK = 200;

double log_sum_exp(const std::vector<double>& v)
{
    double m = -kInf;
    for (double x : v)
        m = std::max(m, x);
    if (!std::isfinite(m))
        return m;
    double s = 0;
    for (double x : v)
        s += std::exp(x - m);
    return m + std::log(s);
}

struct Thm51Sums {
    double lhs, log_rhs_sum;
};

// log sum e^f w and log sum e^{alpha |Lf|} w
template <class Gen>
Thm51Sums thm51_sums(const std::vector<double>& w, const DiscreteFunction& f, double alpha,
                     Gen gen)
{
    std::vector<double> a, b;
    for (long k = 0; k < static_cast<long>(w.size()); ++k) {
        double lw = std::log(w[k]);
        a.push_back(lw + f(k));
        b.push_back(lw + alpha * std::abs(gen(k)));
    }
    return {log_sum_exp(a), log_sum_exp(b)};
}

double rel_change(double a, double b)
{
    double s = std::max(std::abs(a), std::abs(b));
    return s > 0 ? std::abs(a - b) / s : 0.0;
}

InequalityReport exponential_common(const PoissonConstants& cd, const DiscreteFunction& g,
                                    const char* id)
{
    double lambda = cd.lambda;
    InequalityReport r;
    r.inequality_id = id;
    r.function_tag = g.tag;
    r.tolerance = 1e-9;
    r.params = {{"lambda", lambda}, {"c", cd.c}, {"d", cd.d}, {"A", cd.A}};
    long n = g.K() + kTailExtra;
    std::vector<double> a, b;
    for (long k = 0; k <= n; ++k) {
        double lp = log_poisson_pmf(lambda, k);
        a.push_back(lp + std::abs(g(k)));
        b.push_back(lp + g_lambda_log(lambda, std::abs(g.grad(k))));
    }
    r.lhs = log_sum_exp(a);
    double lsg = log_sum_exp(b);
    r.params["log_sum_G"] = lsg;
    if (lsg > 700) // G(|grad f|) outside the double range: the bound says nothing
        return r.set_vacuous();
    double sg = std::exp(lsg);
    r.rhs = cd.c + cd.d * sg;
    r.params["rhs_anchored"] = cd.c + sg;
    r.params["margin_anchored"] = cd.c + sg - r.lhs;
    return r.settle();
}

} // namespace

InequalityReport theorem_51_check(const ChainSpec& c, const DiscreteFunction& f0, double alpha,
                                  double c_lsi)
{
    c.validate();
    if (c_lsi <= 0)
        c_lsi = c.lambda;
    if (!(alpha > c_lsi))
        throw DomainError("theorem_51_check: alpha must exceed c_lsi");
    DiscreteFunction f = f0.shifted(-truncated_mean(c, f0));

    InequalityReport r;
    r.inequality_id = "poisson-thm51";
    r.function_tag = f0.tag;
    r.tolerance = 1e-9;
    double K = c_lsi / (alpha - c_lsi);
    // in the -Lf form the sharp Poisson constant is 1
    r.params = {{"lambda", c.lambda}, {"alpha", alpha}, {"c_lsi", c_lsi}, {"constant", K},
                {"c_lsi_below_sharp", c_lsi < 1 ? 1.0 : 0.0}};

    auto w = truncated_pmf(c);
    Thm51Sums s = thm51_sums(w, f, alpha, [&](long k) { return mm_infinity_generator(c, f, k); });

    std::vector<double> full(c.K + kTailExtra + 1);
    for (long k = 0; k < static_cast<long>(full.size()); ++k)
        full[k] = poisson_pmf(c.lambda, k);
    Thm51Sums u = thm51_sums(full, f, alpha,
                             [&](long k) { return mm_infinity_generator_full(c.lambda, f, k); });
    double defect = std::max(rel_change(s.lhs, u.lhs), rel_change(s.log_rhs_sum, u.log_rhs_sum));
    r.params["truncation_defect"] = defect;
    r.params["truncation_warning"] = defect > kTruncationWarnLevel ? 1.0 : 0.0;

    r.lhs = s.lhs;
    double lr = std::log(K) + s.log_rhs_sum;
    if (lr > 700)
        return r.set_vacuous();
    r.rhs = std::exp(lr);
    return r.settle();
}

PoissonConstants constants_cd_estimate(double lambda)
{
    if (!(lambda > 0))
        throw DomainError("constants_cd_estimate: lambda > 0");
    PoissonConstants out{};
    out.lambda = lambda;
    long N = poisson_truncation(lambda) + kExactBeyondK;
    out.n_exact = N;

    // S_n = sum_{k<n} pi(k) G*(1/pi(k)); a_n = e^{S_n} pi(n)
    double S = 0, series = poisson_pmf(lambda, 0), log_aN = 0;
    for (long n = 1; n <= N; ++n) {
        S += g_lambda_star_scaled(lambda, -log_poisson_pmf(lambda, n - 1)).value;
        double la = S + log_poisson_pmf(lambda, n);
        series += std::exp(la);
        log_aN = la;
    }
    out.series = series;

    // beyond N, a_{n+1}/a_n <= (n/(n+1)) exp(-1/n + 3/(n log n)), hence
    // a_M <= a_N e^{3/(N log N)} (N/M)^2 (log M / log N)^3 and
    // sum_{M>N} (log M)^3/M^2 <= ((log N)^3 + 3 (log N)^2 + 6 log N + 6) / N
    double nn = static_cast<double>(N), l = std::log(nn);
    double poly = l * l * l + 3 * l * l + 6 * l + 6;
    out.tail_bound = std::exp(log_aN + 3 / (nn * l)) * nn * poly / (l * l * l);
    out.c = std::log(series + out.tail_bound);

    out.A = hardy_constant_poisson(lambda).value;
    out.sup_ratio = g_lambda_inverse_ratio(lambda).value;
    out.d = 1 + out.A * out.sup_ratio;
    return out;
}

InequalityReport poisson_exponential_check(const PoissonConstants& cd, const DiscreteFunction& f)
{
    if (std::abs(f(0)) > 1e-15)
        throw DomainError("poisson_exponential_check: f(0) must be 0");
    return exponential_common(cd, f, "poisson");
}

InequalityReport poisson_exponential_check(double lambda, const DiscreteFunction& f)
{
    return poisson_exponential_check(constants_cd_estimate(lambda), f);
}

InequalityReport poisson_centered_check(const PoissonConstants& cd, const DiscreteFunction& f)
{
    // pi(f) over the full law, tail extension included
    double m = 0;
    for (long k = 0; k <= f.K() + kTailExtra; ++k)
        m += poisson_pmf(cd.lambda, k) * f(k);
    return exponential_common(cd, f.shifted(-m), "poisson-centered");
}

std::vector<DiscreteFunction> discrete_suite(long K)
{
    using T = DiscreteFunction::Tail;
    auto kd = [](long k) { return static_cast<double>(k); };
    std::vector<DiscreteFunction> s;
    s.push_back(DiscreteFunction::tabulate([](long k) { return k == 0 ? 1.0 : 0.0; }, K,
                                           T::constant, 0, "indicator-0"));
    for (auto [a, name] : {std::pair{0.1, "linear-0.1"}, {0.5, "linear-0.5"}, {-0.5, "linear--0.5"}})
        s.push_back(DiscreteFunction::tabulate([&](long k) { return a * kd(k); }, K, T::linear, a,
                                               name));
    s.push_back(DiscreteFunction::tabulate([&](long k) { return 0.3 * std::min(kd(k), 3.0); }, K,
                                           T::constant, 0, "capped-0.3x3"));
    s.push_back(DiscreteFunction::tabulate([](long k) { return k >= 3 ? 1.0 : 0.0; }, K,
                                           T::constant, 0, "step-3"));
    s.push_back(DiscreteFunction::tabulate_linear([&](long k) { return std::sqrt(kd(k)); }, K,
                                                  "sqrt"));
    s.push_back(DiscreteFunction::tabulate_linear([&](long k) { return std::log1p(kd(k)); }, K,
                                                  "log1p"));
    s.push_back(DiscreteFunction::tabulate([&](long k) { return 0.5 * std::sin(kd(k)); }, K,
                                           T::constant, 0, "sin-0.5"));
    s.push_back(DiscreteFunction::tabulate_linear(
        [&](long k) { return 0.1 * kd(k) * std::log1p(kd(k)); }, K, "klog-0.1"));
    return s;
}

} // namespace funkineq

#include "funkineq/poisson/g_lambda.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace funkineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kE = 2.71828182845904523536;

// first x >= 2 on a 0.25 step where log G(x) - L clears log x + margin
double star_window(double lambda, double L, double margin)
{
    double x = 2;
    while (x < 700) {
        double lg = g_lambda_log(lambda, x);
        if (lg - L > std::log(x) + margin && lg > g_lambda_log(lambda, x - 0.25))
            return x;
        x += 0.25;
    }
    throw Unbounded("g_lambda_star: no window below x = 700");
}

std::string at(double x)
{
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

} // namespace

double g_lambda_log(double lambda, double x)
{
    if (!(lambda > 0) || x < 0)
        throw DomainError("g_lambda: lambda > 0, x >= 0");
    if (x <= 1)
        return x > 0 ? std::log(x) : -kInf;
    return lambda * (x + (1 + 2 / x) * std::log(lambda * x)) * std::exp(x);
}

double g_lambda(double lambda, double x)
{
    double lg = g_lambda_log(lambda, x);
    if (lg > std::log(std::numeric_limits<double>::max()))
        throw Overflow("g_lambda: G(x) exceeds the double range");
    return std::exp(lg);
}

StarPoint g_lambda_star_scaled(double lambda, double L)
{
    if (!(lambda > 0))
        throw DomainError("g_lambda_star: lambda > 0");
    // [0,1]: x(1 - e^{-L}), maximal at an endpoint
    StarPoint best = L > 0 ? StarPoint{-std::expm1(-L), 1.0} : StarPoint{0.0, 0.0};
    double hi = star_window(lambda, L, 40);
    auto h = [&](double x) {
        double e = g_lambda_log(lambda, x) - L;
        return e > 700 ? -kInf : x - std::exp(e);
    };
    Argmax m = grid_max(h, 1 + 1e-12, hi, 4000, 1e-14);
    if (m.value > best.value)
        best = {m.value, m.x};
    return best;
}

double g_lambda_star(double lambda, double y)
{
    if (y < 0)
        throw DomainError("g_lambda_star: y >= 0");
    if (y == 0)
        return 0; // G > 0 on (0, inf), G(0+) = 0
    double v = y * g_lambda_star_scaled(lambda, std::log(y)).value;
    if (!std::isfinite(v))
        throw Overflow("g_lambda_star: G*(y) exceeds the double range");
    return v;
}

StarPoint g_lambda_inverse_ratio(double lambda)
{
    auto r = [&](double x) { return std::log(x) - g_lambda_log(lambda, x); };
    double hi = std::max(40.0, star_window(lambda, 0, 40));
    Argmax m = grid_max(r, 1 + 1e-12, hi, 20000, 1e-14);
    double v = std::exp(m.value);
    if (v > 1)
        return {v, m.x};
    return {1.0, 1.0}; // x / G = 1 on (0, 1]
}

GStarBoundReport g_star_bound_check(double lambda, long k_lo, long k_hi)
{
    if (k_lo < 2 || k_hi < k_lo)
        throw DomainError("g_star_bound_check: 2 <= k_lo <= k_hi");
    GStarBoundReport out;
    out.lambda = lambda;
    for (long k = k_lo; k <= k_hi; ++k) {
        double kk = static_cast<double>(k);
        GStarBoundRow row;
        row.k = k;
        row.lhs = g_lambda_star_scaled(lambda, -log_poisson_pmf(lambda, k)).value;
        row.rhs = std::log(kk) - std::log(lambda) - 1 / kk + 3 / (kk * std::log(kk));
        row.margin = row.rhs - row.lhs;
        out.rows.push_back(row);
    }
    // scan from the top: k_min is where the run of nonnegative margins starts
    long i = static_cast<long>(out.rows.size()) - 1;
    while (i >= 0 && out.rows[i].margin >= 0)
        --i;
    if (i + 1 < static_cast<long>(out.rows.size())) {
        out.k_min = out.rows[i + 1].k;
        out.pass = true;
        out.margins_increasing_from_k_min = true;
        for (std::size_t j = i + 2; j < out.rows.size(); ++j)
            if (!(out.rows[j].margin > out.rows[j - 1].margin))
                out.margins_increasing_from_k_min = false;
    }
    return out;
}

double phi_o(double x) { return x * std::log(x); }

double phi_1(double x)
{
    double l = std::log(x);
    return (1 + 1 / std::log(l)) * x * l;
}

double phi_o_inverse(double x)
{
    if (x < kE)
        throw DomainError("phi_o_inverse: x >= e");
    return solve_increasing(phi_o, x, kE, std::max(kE, x), 1e-15);
}

double phi_1_inverse(double x)
{
    double e2 = kE * kE;
    if (x < phi_1(e2))
        throw DomainError("phi_1_inverse: x >= phi_1(e^2)");
    return solve_increasing(phi_1, x, e2, std::max(e2, x), 1e-15);
}

AuditReport phi_lemma_check(const std::vector<double>& x_grid)
{
    AuditReport a;
    a.name = "phi-lemma";
    double e2 = kE * kE, lo1 = phi_1(e2);
    for (double x : x_grid) {
        double l = std::log(x);
        double d0 = phi_o_inverse(x) - x / l;
        a.add("phi0-lower@" + at(x), ">= 0", d0, 0, d0 >= 0);
        if (x >= lo1) {
            double d1 = (x / l) * (1 + 1 / l) - phi_1_inverse(x);
            a.add("phi1-upper@" + at(x), ">= 0", d1, 0, d1 >= 0);
        }
    }
    double rt = phi_o_inverse(phi_o(10.0));
    a.add("phi0-roundtrip", "10", rt, 1e-9, std::abs(rt - 10) <= 1e-9);
    return a;
}

std::vector<double> phi_default_grid(int n)
{
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = std::exp(2.0 + 18.0 * i / (n - 1));
    return g;
}

} // namespace funkineq

#include "funkineq/conjugates/conjugates.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/special.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace funkineq {

double w_inverse(const WeightTriple& t, double w)
{
    double lo = t.domain_lo();
    if (w < t.W(lo))
        throw RangeError("w_inverse: w below the range of W on the working domain");
    auto W = [&](double x) { return t.W(x); };
    auto Wp = [&](double x) { return t.Wp(x); };
    double a = std::max(lo, 1e-6), b = 64.0;
    // keep the bracket inside the domain: expanding downward stops at domain_lo
    while (t.W(a) > w && a > lo)
        a = std::max(lo, a / 16);
    return solve_increasing(W, w, a, b, 1e-15, Wp);
}

double h_inverse(const WeightTriple& t, double h)
{
    if (t.kind() != WeightCase::gauss)
        throw DomainError("h_inverse: Gaussian case only");
    if (!(h > 0 && h < std::sqrt(2.0)))
        throw RangeError("h_inverse: h must lie in (0, sqrt 2)");
    auto H = [&](double x) { return t.H(x); };
    auto Hp = [&](double x) { return t.H(x) * (t.Wp(x) - x); };
    return solve_increasing(H, h, 1e-6, 64.0, 1e-15, Hp);
}

double g_star_closed(const WeightTriple& t, double y)
{
    if (!(y > 0))
        throw RangeError("g_star_closed: y must be positive");
    double x = w_inverse(t, std::log(y));
    return y * (x - 1.0 / t.Vp(x));
}

double g_star_numeric(const RealFn& G, double y, double lo, double hi)
{
    double a = std::max(lo, 0.0);
    double b = std::isnan(hi) ? std::max(10.0, 3.0 * std::log(std::max(y, 1.0))) : hi;
    auto obj = [&](double x) { return x * y - G(x); };
    const int n = 2048;
    Argmax m = grid_max(obj, a, b, n, 1e-14);
    if (std::isnan(hi) && m.x > b - (b - a) / (n - 1))
        throw Unbounded("g_star_numeric: objective still increasing at the window edge");
    return m.value;
}

std::vector<double> log_grid(double a, double b, int n)
{
    std::vector<double> g(n);
    double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i)
        g[i] = std::exp(la + (lb - la) * i / (n - 1));
    g.front() = a;
    g.back() = b;
    return g;
}

double technical_I(double x)
{
    double lh = std::log(WeightTriple::gauss().H(x));
    return 2 * lh / (1 + std::sqrt(1 + 2 * lh / (x * x)));
}

AuditReport technical_lemma_audit(const std::vector<double>& grid)
{
    auto t = WeightTriple::gauss();
    double x0 = w_inverse(t, 0.0);
    auto phi = [&](double x) { return x - 1.0 / t.Vp(x) - std::sqrt(2 * t.W(x)); };

    double worst3 = -INFINITY, worst4 = -INFINITY;
    for (double x : grid) {
        if (x < x0)
            continue;
        worst3 = std::max(worst3, phi(x));
        if (x >= 4)
            worst4 = std::max(worst4, phi(x) + 1.228 / x);
    }
    AuditReport r{"technical-lemma", {}};
    r.add("iii", "x - 1/V'(x) - sqrt(2W(x)) <= 0 for x >= x0", worst3, 0.0, worst3 <= 0);
    r.add("iv", "x - 1/V'(x) - sqrt(2W(x)) <= -1.228/x for x >= 4", worst4, 0.0, worst4 <= 0);
    double se = std::sqrt(std::exp(1.0)) * t.H(std::pow(2.0, 0.25));
    r.add("sqrt-e-h", "sqrt(e) H(2^{1/4}) >= 1", se, 0.0, se >= 1);
    double i4 = technical_I(4.0);
    r.add("i-of-4", "I(4) >= 0.228", i4, 0.0, i4 >= 0.228);
    return r;
}

AuditReport technical_lemma_audit()
{
    double x0 = w_inverse(WeightTriple::gauss(), 0.0);
    return technical_lemma_audit(log_grid(x0, 50.0, 10000));
}

double w_critical(double beta)
{
    auto t = WeightTriple::beta(beta);
    return t.W(1.0 / (t.kappa() * std::pow(beta, 1.0 / beta)));
}

AuditReport preparation_lemma_audit(double beta, const std::vector<double>& grid)
{
    if (!(beta > std::sqrt(5.0) - 1.0 && beta < 2.0))
        throw DomainError("preparation_lemma_audit: beta must lie in (sqrt5 - 1, 2)");
    auto t = WeightTriple::beta(beta);
    double k = t.kappa(), c = (beta - 1) / beta;
    double wc = w_critical(beta);

    // W^{-1}(x) <= bound(x)  <=>  x <= W(bound(x)), W increasing
    double worst = INFINITY;
    int mismatches = 0;
    for (double x : grid) {
        double bound = std::pow(x - c * std::log(x) + 1.0, 1.0 / beta) / k;
        worst = std::min(worst, t.W(bound) - x);
        if (std::abs(x - wc) < 1e-9)
            continue;
        double xi = w_inverse(t, x);
        bool lhs = x <= wc;
        bool rhs = xi - 1.0 / t.Vp(xi) <= 0;
        if (lhs != rhs)
            ++mismatches;
    }
    std::ostringstream id;
    AuditReport r{"preparation-lemma(beta=" + std::to_string(beta) + ")", {}};
    r.add("inverse-bound", "W(bound(x)) - x >= 0 for x > 0", worst, 0.0, worst >= 0);
    r.add("sign-equivalence", "x <= W(x_c) iff W^{-1}(x) - 1/V'(W^{-1}(x)) <= 0",
          static_cast<double>(mismatches), 0.0, mismatches == 0);
    double closed = std::log(std::exp(1.0) * beta) / beta + std::log(k);
    r.add("w-critical-closed-form", "W(x_c) = log(e beta)/beta + log kappa",
          std::abs(wc - closed), 1e-12, std::abs(wc - closed) <= 1e-12);
    r.add("w-critical-range", "1/3 <= W(x_c) <= 1/2", wc, 0.0, wc >= 1.0 / 3 && wc <= 0.5);
    return r;
}

AuditReport preparation_lemma_audit(double beta)
{
    return preparation_lemma_audit(beta, log_grid(1e-4, 1e4, 10000));
}

AuditReport fenchel_young_check(const RealFn& G, const std::vector<std::pair<double, double>>& samples,
                                double lo)
{
    double worst = INFINITY;
    bool ok = true;
    for (auto [x, y] : samples) {
        double hi = std::max({10.0, 3.0 * std::log(std::max(y, 1.0)), x});
        double gs = g_star_numeric(G, y, lo, hi);
        double slack = G(x) + gs - x * y;
        double tol = 1e-12 * (1 + std::abs(x * y));
        if (slack < -tol)
            ok = false;
        worst = std::min(worst, slack / (1 + std::abs(x * y)));
    }
    AuditReport r{"fenchel-young", {}};
    r.add("slack", "xy <= G(x) + G*(y) on all samples", worst, 1e-12, ok);
    return r;
}

} // namespace funkineq

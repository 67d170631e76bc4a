#include "funkineq/core/special.hpp"

#include "funkineq/core/errors.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace funkineq {

double normal_pdf(double x) { return std::exp(log_normal_pdf(x)); }

double log_normal_pdf(double x) { return -0.5 * x * x - kLogSqrt2Pi; }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double normal_quantile(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw DomainError("normal_quantile: p must lie in (0,1)");
    // erfc_inv keeps full relative precision in both tails
    return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

double mills_ratio(double r)
{
    if (r < 30.0)
        return kSqrtHalfPi * std::exp(0.5 * r * r) * std::erfc(r / std::sqrt(2.0));
    // erfc underflows; asymptotic series is exact to double precision here
    double z = 1.0 / (r * r);
    return (1.0 - z * (1.0 - 3.0 * z * (1.0 - 5.0 * z * (1.0 - 7.0 * z)))) / r;
}

MillsSup mills_sup()
{
    const int n = 1000;
    double best = -1, arg = 0, prev = std::numeric_limits<double>::infinity();
    bool mono = true;
    for (int i = 0; i < n; ++i) {
        double r = 8.0 * i / (n - 1);
        double h = mills_ratio(r);
        if (h > prev)
            mono = false;
        prev = h;
        if (h > best) {
            best = h;
            arg = r;
        }
    }
    return {best, arg, mono};
}

double log_factorial(long n) { return boost::math::lgamma(static_cast<double>(n) + 1.0); }

double log_poisson_pmf(double lambda, long k)
{
    return -lambda + k * std::log(lambda) - log_factorial(k);
}

double poisson_pmf(double lambda, long k) { return std::exp(log_poisson_pmf(lambda, k)); }

double poisson_tail(double lambda, long k)
{
    if (k < 0)
        return 1.0;
    return boost::math::gamma_p(static_cast<double>(k) + 1.0, lambda);
}

long poisson_truncation(double lambda)
{
    return std::max(50L, static_cast<long>(std::ceil(lambda + 20.0 * std::sqrt(lambda))));
}

StirlingReport stirling_bounds_check(long n)
{
    if (n < 1)
        throw DomainError("stirling_bounds_check: n >= 1");
    // r_n - r_{n-1} = 1 - (n - 1/2) log(1 + 1/(n-1)); no cancellation of large logs
    double r = 1.0 - kLogSqrt2Pi;
    for (long m = 2; m <= n; ++m)
        r += 1.0 - (m - 0.5) * std::log1p(1.0 / (m - 1));
    StirlingReport s;
    s.n = n;
    s.log_ratio = r;
    s.lower = 1.0 / (1.0 + 12.0 * n);
    s.upper = 1.0 / (12.0 * n);
    s.slack_lower = r - s.lower;
    s.slack_upper = s.upper - r;
    s.pass = s.slack_lower >= 0 && s.slack_upper >= 0;
    return s;
}

double solve_increasing(const std::function<double(double)>& f, double target, double lo,
                        double hi, double xtol, const std::function<double(double)>& df)
{
    double flo = f(lo) - target, fhi = f(hi) - target;
    for (int i = 0; i < 200 && flo > 0; ++i) {
        lo = (lo > 0) ? lo / 4 : lo * 2 - 1;
        flo = f(lo) - target;
    }
    for (int i = 0; i < 200 && fhi < 0; ++i) {
        hi = (hi > 0) ? hi * 2 : hi / 2 + 1;
        fhi = f(hi) - target;
    }
    if (flo > 0 || fhi < 0 || std::isnan(flo) || std::isnan(fhi))
        throw RangeError("solve_increasing: target not bracketed");
    if (flo == 0)
        return lo;
    if (fhi == 0)
        return hi;

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 300; ++it) {
        double fx = f(x) - target;
        if (fx == 0)
            return x;
        if (fx < 0)
            lo = x;
        else
            hi = x;
        if (hi - lo <= xtol * std::max(1.0, std::abs(x)))
            break;
        double step = std::numeric_limits<double>::quiet_NaN();
        if (df) {
            double d = df(x);
            if (d > 0)
                step = x - fx / d;
        }
        if (std::isfinite(step) && step > lo && step < hi)
            x = step;
        else
            x = 0.5 * (lo + hi);
    }
    // last Newton step may already be inside xtol without shrinking the bracket
    return x;
}

Argmax golden_max(const std::function<double(double)>& f, double a, double b, double xtol)
{
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol * std::max(1.0, std::abs(a) + std::abs(b))) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? Argmax{c, fc} : Argmax{d, fd};
}

Argmax grid_max(const std::function<double(double)>& f, double a, double b, int n, double xtol)
{
    int best = 0;
    double bv = -std::numeric_limits<double>::infinity();
    double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) {
        double v = f(a + i * h);
        if (v > bv) {
            bv = v;
            best = i;
        }
    }
    double lo = a + std::max(0, best - 1) * h;
    double hi = a + std::min(n - 1, best + 1) * h;
    Argmax r = golden_max(f, lo, hi, xtol);
    // keep endpoint winners (golden never evaluates the bracket ends)
    if (bv > r.value)
        return {a + best * h, bv};
    return r;
}

std::vector<double> sign_changes(const std::function<double(double)>& f, double lo, double hi,
                                 int n)
{
    std::vector<double> out;
    double px = lo, pv = f(lo);
    if (pv == 0)
        out.push_back(lo);
    for (int i = 1; i <= n; ++i) {
        double x = lo + (hi - lo) * i / n, v = f(x);
        if (v == 0) {
            out.push_back(x);
        } else if (pv != 0 && (v > 0) != (pv > 0) && std::isfinite(v) && std::isfinite(pv)) {
            double a = px, b = x, fa = pv;
            for (int k = 0; k < 60 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++k) {
                double m = 0.5 * (a + b), fm = f(m);
                if (fm == 0) {
                    a = b = m;
                    break;
                }
                if ((fm > 0) == (fa > 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        px = x;
        pv = v;
    }
    return out;
}

} // namespace funkineq

#pragma once

#include <functional>
#include <vector>

namespace funkineq {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrtHalfPi = 1.25331413731550025121; // sqrt(pi/2)
inline constexpr double kLogSqrt2Pi = 0.91893853320467274178;

double normal_pdf(double x);
double log_normal_pdf(double x);
double normal_cdf(double x);
double normal_sf(double x); // 1 - cdf, accurate in the right tail
double normal_quantile(double p);

// H(r) = e^{r^2/2} int_r^inf e^{-x^2/2} dx
double mills_ratio(double r);

struct MillsSup {
    double value;
    double argmax;
    bool monotone; // grid check of H non-increasing on [0, 8]
};
MillsSup mills_sup();

double log_poisson_pmf(double lambda, long k);
double poisson_pmf(double lambda, long k);
// sum_{n >= k+1} pi(n)
double poisson_tail(double lambda, long k);
// K(lambda) = max(50, ceil(lambda + 20 sqrt(lambda)))
long poisson_truncation(double lambda);

double log_factorial(long n);

struct StirlingReport {
    long n;
    double log_ratio;   // log(n! / (n^n e^{-n} sqrt(2 pi n)))
    double lower;       // 1/(1+12n)
    double upper;       // 1/(12n)
    double slack_lower; // log_ratio - lower
    double slack_upper; // upper - log_ratio
    bool pass;
};
StirlingReport stirling_bounds_check(long n);

// Root of an increasing f with f(x) = target. Bracket grows geometrically
// away from [lo, hi] until it straddles; then safeguarded Newton/bisection
// (df may be empty, then plain bisection + secant).
double solve_increasing(const std::function<double(double)>& f, double target, double lo,
                        double hi, double xtol = 1e-15,
                        const std::function<double(double)>& df = {});

// zeros and sign changes of f on a uniform n-cell scan of [lo, hi], each refined by
// bisection; misses pairs of roots closer than the scan step
std::vector<double> sign_changes(const std::function<double(double)>& f, double lo, double hi,
                                 int n = 6000);

struct Argmax {
    double x;
    double value;
};
// golden-section on a unimodal objective
Argmax golden_max(const std::function<double(double)>& f, double a, double b, double xtol = 1e-12);
// uniform grid of n points, then golden refinement around the best cell
Argmax grid_max(const std::function<double(double)>& f, double a, double b, int n = 2048,
                double xtol = 1e-12);

} // namespace funkineq

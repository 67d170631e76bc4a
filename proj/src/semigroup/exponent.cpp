#include "funkineq/semigroup/exponent.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace funkineq {

double ExponentParams::a_t() const { return std::sqrt(2 * rho * alpha * std::expm1(2 * rho * t)); }

double ExponentParams::alpha_threshold(double rho, double t)
{
    // (e^{2rt} + e^{-2rt} - 2) = (e^{rt} - e^{-rt})^2
    double sh = 2 * std::sinh(rho * t);
    return sh * sh / (2 * rho * std::expm1(2 * rho * t));
}

double c_alpha(const ExponentParams& p)
{
    if (!(p.rho > 0 && p.t > 0 && p.alpha > 0))
        throw DomainError("c_alpha: need rho, t, alpha > 0");
    double a = p.a_t();
    double e = std::exp(p.rho * p.t);
    double em2 = std::exp(-2 * p.rho * p.t);
    double num = (e * a - 1) * (e * a + 1 + a * a - em2);
    double den = (e * a + 1) * (-e * a + 1 + a * a - em2);
    double arg = num / den;
    if (!(arg > 0) || !std::isfinite(arg))
        throw DomainError("c_alpha: log argument not positive (alpha inadmissible)");
    double c = std::sqrt(-std::expm1(-2 * p.rho * p.t)) / (2 * std::sqrt(2 * p.rho * p.alpha)) *
               std::log(arg);
    if (!(c > 0))
        throw DomainError("c_alpha: non-positive exponent");
    return c;
}

double c_alpha_limit(double alpha, double rho)
{
    double x = std::sqrt(2 * rho * alpha);
    if (!(x > 1))
        throw DomainError("c_alpha_limit: need alpha > 1/(2 rho)");
    return std::log((x + 1) / (x - 1)) / (2 * x);
}

IntegralIdentity integral_identity_check(double rho, double alpha, double t, double rel_tol)
{
    IntegralIdentity r{};
    r.closed = c_alpha({alpha, rho, t});
    double E = std::expm1(2 * rho * t);
    auto g = [&](double s) {
        double d1 = std::expm1(2 * rho * (t - s));
        double d2 = std::expm1(-2 * rho * (t - s));
        return 2 * rho * E / (2 * rho * alpha * std::exp(2 * rho * s) * E + d1 * d2);
    };
    QuadratureConfig q;
    q.rel_tol = 1e-13;
    q.abs_tol = 1e-15;
    Integral I = integrate(g, 0.0, t, q);
    r.quadrature = I.value;
    r.quadrature_error = I.error;
    r.rel_diff = std::abs(r.quadrature - r.closed) / std::abs(r.closed);
    r.pass = r.rel_diff <= rel_tol;
    return r;
}

AuditReport exponent_chain_check(int n)
{
    AuditReport r;
    r.name = "exponent-chain";
    double worst1 = -1e300, worst2 = -1e300;
    for (int i = 1; i <= n; ++i) {
        double x = 1 + 9.0 * i / n;
        double a = std::log((x + 1) / (x - 1)) / (2 * x);
        double b = std::log(x * x / (x * x - 1));
        double c = 1 / (x * x - 1);
        worst1 = std::max(worst1, a - b);
        worst2 = std::max(worst2, b - c);
    }
    r.add("limit-vs-log", "(1/2x)log((x+1)/(x-1)) <= log(x^2/(x^2-1))", worst1, 1e-15,
          worst1 <= 1e-15);
    r.add("log-vs-inverse", "log(x^2/(x^2-1)) <= 1/(x^2-1)", worst2, 1e-15, worst2 <= 1e-15);
    return r;
}

} // namespace funkineq

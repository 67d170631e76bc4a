#include "funkineq/semigroup/semigroup.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/measure.hpp"
#include "funkineq/core/special.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace funkineq {

namespace {

// Curvature rho is the standard kernel at time rho*t acting on z -> f(z/sqrt(rho))
// at the point x*sqrt(rho). Written out, that is the map below.
struct Kernel {
    double a; // e^{-rho t}
    double s; // sqrt((1 - e^{-2 rho t})/rho)
};

Kernel kernel(double t, double rho)
{
    if (!(t >= 0))
        throw DomainError("semigroup time must be non-negative");
    if (!(rho > 0))
        throw DomainError("curvature must be positive");
    double tau = rho * t;
    return {std::exp(-tau), std::sqrt(-std::expm1(-2 * tau) / rho)};
}

std::vector<double> mapped_kinks(const std::vector<double>& kinks, const Kernel& k, double x)
{
    std::vector<double> out;
    if (k.s == 0)
        return out;
    for (double z : kinks)
        out.push_back((z - k.a * x) / k.s);
    return out;
}

// tighter config for finite differences across x
QuadratureConfig fd_config(QuadratureConfig q)
{
    q.rel_tol = std::min(q.rel_tol, 1e-12);
    q.abs_tol = std::min(q.abs_tol, 1e-14);
    return q;
}

// |f'| has kinks where f' changes sign
std::vector<double> critical_points(const Function1D& f)
{
    std::vector<double> out(f.kinks());
    auto z = sign_changes([&](double x) { return f.deriv(x); }, -30, 30);
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

double mehler_apply(const RealFn& f, double t, double x, const QuadratureConfig& q, double rho,
                    const std::vector<double>& kinks)
{
    Kernel k = kernel(t, rho);
    if (k.s == 0)
        return f(x);
    auto g = [&](double y) { return f(k.a * x + k.s * y); };
    return weighted_integral(g, MeasureSpec::gaussian(), q, mapped_kinks(kinks, k, x)).value;
}

double mehler_apply(const Function1D& f, double t, double x, const QuadratureConfig& q, double rho)
{
    return mehler_apply([&](double z) { return f(z); }, t, x, q, rho, f.kinks());
}

LogIntegral mehler_log_exp(const RealFn& h, double t, double x, const QuadratureConfig& q,
                           double rho, const std::vector<double>& kinks)
{
    Kernel k = kernel(t, rho);
    if (k.s == 0)
        return {h(x), 0.0};
    auto g = [&](double y) { return h(k.a * x + k.s * y); };
    return log_exp_moment(g, MeasureSpec::gaussian(), q, mapped_kinks(kinks, k, x));
}

double gamma_of(const Function1D& f, double x)
{
    double d = f.deriv(x);
    return d * d;
}

double gamma_of_semigroup(const Function1D& f, double t, double x, const QuadratureConfig& q,
                          double rho)
{
    QuadratureConfig qq = fd_config(q);
    double h = 1e-4 * std::max(1.0, std::abs(x));
    auto P = [&](double z) { return mehler_apply(f, t, z, qq, rho); };
    auto D = [&](double step) { return (P(x + step) - P(x - step)) / (2 * step); };
    double d1 = D(h), d2 = D(h / 2);
    double d = (4 * d2 - d1) / 3;
    return d * d;
}

double ou_generator(const Function1D& f, double x) { return f.second(x) - x * f.deriv(x); }

AuditReport commutation_check(const Function1D& f, double t, const std::vector<double>& grid,
                              const QuadratureConfig& q)
{
    AuditReport r;
    r.name = "commutation";
    double e1 = std::exp(-t), e2 = std::exp(-2 * t);
    RealFn gam = [&](double z) { return gamma_of(f, z); };
    RealFn sgam = [&](double z) { return std::abs(f.deriv(z)); };
    auto crit = critical_points(f);
    double worst = -1e300, worst_sqrt = -1e300;
    for (double x : grid) {
        double lhs = gamma_of_semigroup(f, t, x, q);
        double rhs = e2 * mehler_apply(gam, t, x, q, 1.0, f.kinks());
        worst = std::max(worst, lhs - rhs);
        double rs = e1 * mehler_apply(sgam, t, x, q, 1.0, crit);
        worst_sqrt = std::max(worst_sqrt, std::sqrt(lhs) - rs);
    }
    r.add("gamma", "Gamma(P_t f) <= e^{-2t} P_t Gamma f", worst, 1e-7, worst <= 1e-7);
    r.add("sqrt-gamma", "sqrt Gamma(P_t f) <= e^{-t} P_t sqrt Gamma f", worst_sqrt, 1e-7,
          worst_sqrt <= 1e-7);
    return r;
}

InequalityReport local_lsi_check(const Function1D& f, double t, double x,
                                 const QuadratureConfig& q, double rho)
{
    const auto& ks = f.kinks();
    RealFn g = [&](double z) {
        double v = f(z);
        if (!(v > 0))
            throw DomainError("local LSI needs a strictly positive f");
        return v * v;
    };
    RealFn glog = [&](double z) {
        double v = f(z);
        return v * v * 2 * std::log(v);
    };
    RealFn gam = [&](double z) { return gamma_of(f, z); };
    double Pg = mehler_apply(g, t, x, q, rho, ks);
    double Pglog = mehler_apply(glog, t, x, q, rho, ks);
    double ent = Pglog - Pg * std::log(Pg);
    double rhs = (2 / rho) * -std::expm1(-2 * rho * t) * mehler_apply(gam, t, x, q, rho, ks);

    InequalityReport r;
    r.inequality_id = "local-lsi";
    r.lhs = ent;
    r.rhs = rhs;
    r.tolerance = 1e-7;
    r.params = {{"t", t}, {"x", x}, {"rho", rho}};
    r.function_tag = f.tag().str();
    return r.settle();
}

double hypercontractivity_psi(const Function1D& f, double t, double p, double s,
                              const QuadratureConfig& q, double rho, double x0)
{
    if (!(s >= 0 && s < t))
        throw DomainError("need 0 <= s < t");
    double qs = p * std::expm1(2 * rho * t) / std::expm1(2 * rho * (t - s));
    RealFn inner = [&](double z) { return qs * mehler_apply(f, s, z, q, rho); };
    // P_s f is smooth for s > 0, so kinks only matter at s = 0
    std::vector<double> ks = s == 0 ? f.kinks() : std::vector<double>{};
    return mehler_log_exp(inner, t - s, x0, q, rho, ks).log_value / qs;
}

AuditReport hypercontractivity_monotonicity_check(const Function1D& f, double t, double p,
                                                  const std::vector<double>& s_grid,
                                                  const QuadratureConfig& q, double rho, double x0)
{
    AuditReport r;
    r.name = "hypercontractivity";
    double worst = -1e300;
    double prev = 0;
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        double v = hypercontractivity_psi(f, t, p, s_grid[i], q, rho, x0);
        if (i > 0)
            worst = std::max(worst, v - prev);
        prev = v;
    }
    if (s_grid.size() < 2)
        worst = 0;
    r.add("psi-non-increasing", "max increase " + fmt(worst), worst, 1e-6, worst <= 1e-6);
    return r;
}

} // namespace funkineq

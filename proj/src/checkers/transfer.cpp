#include "funkineq/checkers/transfer.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/special.hpp"
#include "funkineq/rearrangement/hardy.hpp"
#include "funkineq/rearrangement/rearrangement.hpp"

#include <algorithm>
#include <cmath>

namespace funkineq {

namespace {

double log_add_exp(double a, double b)
{
    double m = std::max(a, b);
    if (std::isinf(m))
        return m;
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// log int e^{f - mean} dmu vs log F(int G dmu), both under mu
InequalityReport direct_check(const std::string& id, const MeasureSpec& mu,
                              const BaseInequality& base, const Function1D& g,
                              const QuadratureConfig& q)
{
    InequalityReport r;
    r.inequality_id = id;
    r.function_tag = g.tag().str();
    r.params["base"] = 0;
    r.lhs = centered_log_exp(g, mu, q, &r.quadrature_error);
    if (std::isinf(r.lhs))
        throw NonFiniteIntegrand(id + ": int e^g diverges");
    double lg = log_g_moment(g, base.log_G, mu, q, &r.quadrature_error);
    if (std::isinf(lg))
        return r.set_vacuous();
    r.rhs = base.log_F(lg);
    return r.settle();
}

} // namespace

InequalityReport holley_stroock_transfer(const BaseInequality& base, const Function1D& h,
                                         double a, double b, const Function1D& f,
                                         const QuadratureConfig& q)
{
    auto mu = MeasureSpec::gaussian();
    auto nu = MeasureSpec::perturbed(mu, h, a, b);
    // nu's density against gamma is h/Z
    double Z = nu.normalization();
    double ae = a / Z, be = b / Z;
    InequalityReport r;
    r.inequality_id = "hs-transfer";
    r.function_tag = f.tag().str();
    r.params = {{"a", ae}, {"b", be}, {"Z", Z}};
    r.lhs = centered_log_exp(f, nu, q, &r.quadrature_error);
    if (std::isinf(r.lhs))
        throw NonFiniteIntegrand("hs-transfer: int e^f dnu diverges");
    double lg = log_g_moment(f, base.log_G, nu, q, &r.quadrature_error);
    if (std::isinf(lg))
        return r.set_vacuous();
    double lf = base.log_F(lg - std::log(ae));
    r.rhs = log_add_exp(0.0, std::log(be) + lf);
    if (!std::isfinite(r.rhs))
        return r.set_vacuous();
    return r.settle();
}

Transport1D monotone_transport(const MeasureSpec& mu, double xmax, int n)
{
    if (mu.is_discrete())
        throw DomainError("monotone_transport: continuous target required");
    QuadratureConfig q;
    q.rel_tol = 1e-13;
    q.abs_tol = 1e-300;
    auto dens = [&](double y) { return std::exp(mu.log_density(y)); };
    const double L = 12;
    const int cells = 2400;
    std::vector<double> y(cells + 1), left(cells + 1, 0.0), right(cells + 1, 0.0);
    for (int i = 0; i <= cells; ++i)
        y[i] = -L + 2 * L * i / cells;
    std::vector<double> piece(cells);
    for (int i = 0; i < cells; ++i)
        piece[i] = integrate(dens, y[i], y[i + 1], q, mu.breaks()).value;
    for (int i = 0; i < cells; ++i)
        left[i + 1] = left[i] + piece[i];
    for (int i = cells - 1; i >= 0; --i)
        right[i] = right[i + 1] + piece[i];

    Transport1D out;
    out.x.resize(n);
    out.T.resize(n);
    for (int k = 0; k < n; ++k) {
        double x = -xmax + 2 * xmax * k / (n - 1);
        out.x[k] = x;
        double t;
        if (x <= 0) {
            // mu(-inf, T] = Phi(x), accumulated from the left
            double p = normal_cdf(x);
            int i = static_cast<int>(std::upper_bound(left.begin(), left.end(), p) - left.begin()) - 1;
            i = std::clamp(i, 0, cells - 1);
            auto F = [&](double z) { return left[i] + integrate(dens, y[i], z, q).value; };
            t = solve_increasing(F, p, y[i], y[i + 1], 1e-14, dens);
        } else {
            // mu[T, inf) = 1 - Phi(x), from the right
            double p = normal_sf(x);
            int i = cells - 1;
            while (i > 0 && right[i] < p)
                --i;
            auto F = [&](double z) { return -(right[i + 1] + integrate(dens, z, y[i + 1], q).value); };
            t = solve_increasing(F, -p, y[i], y[i + 1], 1e-14, dens);
        }
        out.T[k] = t;
    }
    out.lipschitz = 0;
    for (int k = 1; k < n; ++k)
        out.lipschitz =
            std::max(out.lipschitz, std::abs(out.T[k] - out.T[k - 1]) / (out.x[k] - out.x[k - 1]));
    return out;
}

InequalityReport contraction_transfer_1d(const MeasureSpec& mu, const BaseInequality& base,
                                         const Function1D& g, const QuadratureConfig& q)
{
    auto tr = monotone_transport(mu);
    if (tr.lipschitz > 1 + 1e-6)
        throw NotLogConcave("transport is not 1-Lipschitz (max slope " +
                            std::to_string(tr.lipschitz) + ")");
    auto r = direct_check("contraction-1d", mu, base, g, q);
    r.params.erase("base");
    r.params["lipschitz"] = tr.lipschitz;
    // same left side through the transport, int e^{g(T)} dgamma
    double m = weighted_integral(g, mu, q).value;
    auto trp = monotone_transport(mu, 7.5, 1501);
    Integral via;
    double dx = trp.x[1] - trp.x[0];
    for (int k = 0; k + 1 < trp.x.size(); ++k) {
        double xm = 0.5 * (trp.x[k] + trp.x[k + 1]);
        double Tm = 0.5 * (trp.T[k] + trp.T[k + 1]);
        via.value += std::exp(g(Tm) - m) * normal_pdf(xm) * dx;
    }
    r.params["lhs_via_transport"] = std::log(via.value);
    return r;
}

double maximal_median(const Function1D& g)
{
    RealFn f = [&](double x) { return g(x); };
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i <= 2000; ++i) {
        double v = g(-10 + 20.0 * i / 2000);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (gaussian_superlevel_mass(f, lo, 20001) <= 0.5)
        return lo;
    // mass(g > t) is non-increasing in t; find the first t where it is <= 1/2
    for (int it = 0; it < 100 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
        double mid = 0.5 * (lo + hi);
        if (gaussian_superlevel_mass(f, mid, 20001) <= 0.5)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

InequalityReport median_variant_check(const Function1D& g0, double a, double c_cheeger,
                                      const QuadratureConfig& q)
{
    if (c_cheeger <= 0)
        c_cheeger = hardy_constant_gaussian();
    double med = maximal_median(g0);
    Function1D g = g0.plus(-med);
    auto mu = MeasureSpec::gaussian();
    InequalityReport r;
    r.inequality_id = "median";
    r.function_tag = g0.tag().str();
    r.params = {{"median", med}, {"a", a}, {"c_cheeger", c_cheeger}};
    try {
        r.lhs = log_exp_moment([&](double x) { return g(x); }, mu, q, g.kinks()).log_value;
    } catch (const NonFiniteIntegrand&) {
        throw NonFiniteIntegrand("median: int e^g diverges");
    }
    double lg = log_g_moment(g, BaseInequality::ir().log_G, mu, q, &r.quadrature_error);
    if (std::isinf(lg))
        return r.set_vacuous();
    r.rhs = (a + 2 * c_cheeger) * std::exp(lg);
    return r.settle();
}

} // namespace funkineq

#include "funkineq/core/measure.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/special.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace funkineq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> merged(std::vector<double> a, const std::vector<double>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
} // namespace

MeasureSpec MeasureSpec::gaussian() { return MeasureSpec(Gaussian1D{}); }

MeasureSpec MeasureSpec::subgaussian(double p)
{
    if (!(p > 1.0 && p <= 2.0))
        throw DomainError("subgaussian: p must lie in (1,2]");
    MeasureSpec m(SubGaussian{p});
    QuadratureConfig q;
    auto L = [p](double x) { return -std::pow(std::abs(x), p); };
    m.log_Z_ = integrate_log(L, -kInf, kInf, q, {0.0}).log_value;
    return m;
}

MeasureSpec MeasureSpec::poisson(double lambda)
{
    if (!(lambda > 0))
        throw DomainError("poisson: lambda must be positive");
    return MeasureSpec(PoissonLaw{lambda});
}

MeasureSpec MeasureSpec::tilted(Function1D V, std::string name)
{
    MeasureSpec m(Tilted{V, std::move(name)});
    QuadratureConfig q;
    auto L = [V](double x) { return log_normal_pdf(x) - V(x); };
    m.log_Z_ = integrate_log(L, -kInf, kInf, q, V.kinks()).log_value;
    return m;
}

MeasureSpec MeasureSpec::perturbed(const MeasureSpec& base, Function1D h, double a, double b)
{
    if (!(a > 0 && a < b && std::isfinite(b)))
        throw DomainError("perturbed: need 0 < a < b < inf");
    if (base.is_discrete())
        throw DomainError("perturbed: continuous base required");
    QuadratureConfig q;
    double R = q.truncation_radius;
    for (int i = 0; i <= 4000; ++i) {
        double x = -R + 2 * R * i / 4000.0;
        double v = h(x);
        if (!(v >= a && v <= b))
            throw DomainError("perturbed: h leaves [a,b] at x=" + std::to_string(x));
    }
    MeasureSpec m(Perturbed{std::make_shared<const MeasureSpec>(base), h, a, b});
    auto L = [&](double x) { return base.log_density(x) + std::log(h(x)); };
    m.log_Z_ = integrate_log(L, -kInf, kInf, q, merged(base.breaks(), h.kinks())).log_value;
    return m;
}

std::string MeasureSpec::name() const
{
    std::ostringstream os;
    std::visit(overloaded{[&](const Gaussian1D&) { os << "gaussian1d"; },
                          [&](const SubGaussian& s) { os << "subgaussian(p=" << s.p << ")"; },
                          [&](const PoissonLaw& s) { os << "poisson(lambda=" << s.lambda << ")"; },
                          [&](const Tilted& s) { os << "tilted(" << s.name << ")"; },
                          [&](const Perturbed& s) {
                              os << "perturbed(" << s.base->name() << ",a=" << s.a
                                 << ",b=" << s.b << ")";
                          }},
               kind_);
    return os.str();
}

double MeasureSpec::raw_log_density(double x) const
{
    return std::visit(
        overloaded{[&](const Gaussian1D&) { return log_normal_pdf(x); },
                   [&](const SubGaussian& s) { return -std::pow(std::abs(x), s.p); },
                   [&](const PoissonLaw& s) {
                       double k = std::round(x);
                       if (k < 0 || k != x)
                           return -kInf;
                       return log_poisson_pmf(s.lambda, static_cast<long>(k));
                   },
                   [&](const Tilted& s) { return log_normal_pdf(x) - s.V(x); },
                   [&](const Perturbed& s) { return s.base->log_density(x) + std::log(s.h(x)); }},
        kind_);
}

double MeasureSpec::log_density(double x) const { return raw_log_density(x) - log_Z_; }

Interval MeasureSpec::support() const
{
    if (is_discrete())
        return {0.0, kInf};
    return {};
}

std::vector<double> MeasureSpec::breaks() const
{
    return std::visit(overloaded{[](const Gaussian1D&) { return std::vector<double>{}; },
                                 [](const SubGaussian&) { return std::vector<double>{0.0}; },
                                 [](const PoissonLaw&) { return std::vector<double>{}; },
                                 [](const Tilted& s) { return s.V.kinks(); },
                                 [](const Perturbed& s) {
                                     return merged(s.base->breaks(), s.h.kinks());
                                 }},
                      kind_);
}

Integral weighted_integral(const RealFn& f, const MeasureSpec& mu, const QuadratureConfig& q,
                           const std::vector<double>& breaks)
{
    if (auto* p = std::get_if<PoissonLaw>(&mu.kind())) {
        long K = poisson_truncation(p->lambda);
        Integral out;
        for (long k = 0; k <= K; ++k) {
            double v = f(static_cast<double>(k));
            if (!std::isfinite(v))
                throw NonFiniteIntegrand("summand not finite at k=" + std::to_string(k));
            out.value += v * poisson_pmf(p->lambda, k);
        }
        out.error = poisson_tail(p->lambda, K);
        return out;
    }
    if (mu.is_gaussian() && q.scheme == Scheme::gauss_hermite) {
        auto eval = [&](int n) {
            auto rule = gauss_hermite_rule(n);
            double s = 0;
            for (int i = 0; i < n; ++i) {
                double v = f(rule.nodes[i]);
                if (!std::isfinite(v))
                    throw NonFiniteIntegrand("integrand not finite at a Gauss-Hermite node");
                s += rule.weights[i] * v;
            }
            return s;
        };
        int n = std::max(2, q.order);
        double full = eval(n), half = eval(std::max(2, n / 2));
        return {full, std::abs(full - half)};
    }
    auto g = [&](double x) {
        double v = f(x);
        if (v == 0)
            return 0.0;
        return v * std::exp(mu.log_density(x));
    };
    Interval s = mu.support();
    return integrate_line(g, s.lo, s.hi, q, merged(mu.breaks(), breaks));
}

Integral weighted_integral(const Function1D& f, const MeasureSpec& mu, const QuadratureConfig& q)
{
    return weighted_integral([&](double x) { return f(x); }, mu, q, f.kinks());
}

LogIntegral log_exp_moment(const RealFn& h, const MeasureSpec& mu, const QuadratureConfig& q,
                           const std::vector<double>& breaks)
{
    if (auto* p = std::get_if<PoissonLaw>(&mu.kind())) {
        long K = poisson_truncation(p->lambda);
        double M = -kInf;
        std::vector<double> t(K + 1);
        for (long k = 0; k <= K; ++k) {
            t[k] = h(static_cast<double>(k)) + log_poisson_pmf(p->lambda, k);
            if (std::isnan(t[k]) || t[k] == kInf)
                throw NonFiniteIntegrand("summand not finite at k=" + std::to_string(k));
            M = std::max(M, t[k]);
        }
        double s = 0;
        for (double v : t)
            s += std::exp(v - M);
        return {M + std::log(s), 0.0};
    }
    auto L = [&](double x) { return h(x) + mu.log_density(x); };
    Interval s = mu.support();
    return integrate_log(L, s.lo, s.hi, q, merged(mu.breaks(), breaks));
}

Integral halfline_integral(const RealFn& f, const QuadratureConfig& q,
                           const std::vector<double>& breaks)
{
    auto g = [&](double x) {
        double v = f(x);
        return v == 0 ? 0.0 : v * std::exp(-0.5 * x * x);
    };
    return integrate_line(g, 0.0, kInf, q, breaks);
}

Integral halfline_integral(const Function1D& f, const QuadratureConfig& q)
{
    return halfline_integral([&](double x) { return f(x); }, q, f.kinks());
}

LogIntegral halfline_log_exp(const RealFn& h, const QuadratureConfig& q,
                             const std::vector<double>& breaks)
{
    return integrate_log([&](double x) { return h(x) - 0.5 * x * x; }, 0.0, kInf, q, breaks);
}

} // namespace funkineq

#include "funkineq/checkers/checkers.hpp"

#include "funkineq/conjugates/weight_triple.hpp"
#include "funkineq/core/errors.hpp"
#include "funkineq/core/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace funkineq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

Function1D shifted_to_zero(const Function1D& f) { return f.plus(-f(0.0)); }

void note_err(double* err, double e)
{
    if (err)
        *err = std::max(*err, e);
}

double log_or_inf(const std::function<LogIntegral()>& run, double* err)
{
    try {
        LogIntegral L = run();
        note_err(err, L.rel_error);
        return L.log_value;
    } catch (const NonFiniteIntegrand&) {
        return kInf;
    }
}
} // namespace

std::vector<double> abs_breaks(const Function1D& f, double level)
{
    std::vector<double> out(f.kinks());
    auto a = sign_changes([&](double x) { return f(x) - level; }, -30, 30);
    auto b = sign_changes([&](double x) { return f.deriv(x); }, -30, 30);
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

BaseInequality BaseInequality::bg(double alpha, double c)
{
    if (!(alpha > c))
        throw DomainError("alpha must exceed c=" + std::to_string(c).substr(0, 3));
    double e = c / (alpha - c);
    return {"bg", [e](double L) { return e * L; }, [alpha](double t) { return alpha * t * t; }};
}

BaseInequality BaseInequality::ir()
{
    return {"ir", [](double L) { return 10 * std::exp(L); },
            [](double t) { return 0.5 * t * t - std::log1p(t); }};
}

BaseInequality BaseInequality::ir_sqrt()
{
    return {"ir-sqrt", [](double L) { return 8 * std::exp(L); },
            [](double t) { return 0.5 * t * t - 0.5 * std::log1p(0.5 * t * t); }};
}

double centered_log_exp(const Function1D& f, const MeasureSpec& mu, const QuadratureConfig& q,
                        double* err)
{
    double m = weighted_integral(f, mu, q).value;
    return log_or_inf(
        [&] { return log_exp_moment([&](double x) { return f(x) - m; }, mu, q, f.kinks()); }, err);
}

double log_g_moment(const Function1D& f, const std::function<double(double)>& log_G,
                    const MeasureSpec& mu, const QuadratureConfig& q, double* err)
{
    return log_or_inf(
        [&] {
            return log_exp_moment([&](double x) { return log_G(std::abs(f.deriv(x))); }, mu, q,
                                  abs_breaks(f));
        },
        err);
}

namespace {

InequalityReport base_check(const std::string& id, const Function1D& f, const BaseInequality& b,
                            const QuadratureConfig& q)
{
    auto mu = MeasureSpec::gaussian();
    InequalityReport r;
    r.inequality_id = id;
    r.function_tag = f.tag().str();
    r.lhs = centered_log_exp(f, mu, q, &r.quadrature_error);
    if (std::isinf(r.lhs))
        throw NonFiniteIntegrand(id + ": int e^f diverges");
    double lg = log_g_moment(f, b.log_G, mu, q, &r.quadrature_error);
    r.params["log_int_G"] = lg;
    if (std::isinf(lg))
        return r.set_vacuous();
    r.rhs = b.log_F(lg);
    if (!std::isfinite(r.rhs))
        return r.set_vacuous();
    return r.settle();
}

} // namespace

InequalityReport check_bg(const Function1D& f, double alpha, double c, const QuadratureConfig& q)
{
    auto r = base_check("bg", f, BaseInequality::bg(alpha, c), q);
    r.params["alpha"] = alpha;
    r.params["c"] = c;
    return r;
}

InequalityReport check_ir(const Function1D& f, const QuadratureConfig& q)
{
    return base_check("ir", f, BaseInequality::ir(), q);
}

InequalityReport check_ir_sqrt(const Function1D& f, const QuadratureConfig& q)
{
    auto r = base_check("ir-sqrt", f, BaseInequality::ir_sqrt(), q);
    if (r.vacuous)
        return r;
    auto r14 = base_check("ir-14", f,
                          {"ir-14", [](double L) { return 14 * std::exp(L); },
                           [](double t) { return 0.5 * t * t - std::log1p(t); }},
                          q);
    r.params["rhs_14"] = r14.rhs;
    r.params["margin_14"] = r14.margin;
    // 8/sqrt(1+t^2/2) <= 14/(1+t) pointwise, so rhs_14 >= rhs
    r.satisfied = r.satisfied && r14.satisfied;
    return r;
}

InequalityReport check_exp_hardy(const Function1D& f0, const QuadratureConfig& q)
{
    Function1D f = shifted_to_zero(f0);
    InequalityReport r;
    r.inequality_id = "exp-hardy";
    r.function_tag = f0.tag().str();
    r.params["shift"] = -f0(0.0);
    const auto ks = abs_breaks(f);
    r.lhs = log_or_inf(
        [&] { return halfline_log_exp([&](double x) { return std::abs(f(x)); }, q, ks); },
        &r.quadrature_error);
    if (std::isinf(r.lhs))
        throw NonFiniteIntegrand("exp-hardy: LHS diverges");
    double lg = log_or_inf(
        [&] {
            return halfline_log_exp(
                [&](double x) {
                    double d = f.deriv(x);
                    return 0.5 * d * d - 0.5 * std::log1p(0.5 * d * d);
                },
                q, ks);
        },
        &r.quadrature_error);
    if (std::isinf(lg) || lg > 700)
        return r.set_vacuous();
    r.rhs = std::exp(lg) + kExpHardyConstant;
    return r.settle();
}

InequalityReport check_beta_hardy(const Function1D& f0, double beta, const QuadratureConfig& q)
{
    double cb = c_beta(beta); // throws DomainError outside (sqrt5 - 1, 2)
    double kap = kappa_beta(beta);
    double e = 2 * beta / (beta + 2);
    Function1D f = shifted_to_zero(f0);
    InequalityReport r;
    r.inequality_id = "beta-hardy";
    r.function_tag = f0.tag().str();
    r.params = {{"beta", beta}, {"kappa", kap}, {"c_beta", cb}, {"shift", -f0(0.0)}};
    const auto ks = abs_breaks(f);
    r.lhs = log_or_inf(
        [&] {
            return halfline_log_exp([&](double x) { return std::pow(std::abs(f(x)), e); }, q, ks);
        },
        &r.quadrature_error);
    if (std::isinf(r.lhs))
        throw NonFiniteIntegrand("beta-hardy: LHS diverges");
    double lg = log_or_inf(
        [&] {
            return halfline_log_exp(
                [&](double x) { return std::pow(kap * std::abs(f.deriv(x)), beta); }, q, ks);
        },
        &r.quadrature_error);
    if (std::isinf(lg) || e * lg > 700)
        return r.set_vacuous();
    r.rhs = std::exp(e * lg) + cb;
    return r.settle();
}

double kappa_cmp(double beta) { return 1 / std::sqrt(2.0) + std::sqrt(2.0) / beta; }

InequalityReport check_cmp(const Function1D& f, double beta, double kappa,
                           const QuadratureConfig& q)
{
    if (!(beta > 0))
        throw DomainError("cmp: beta must be positive");
    if (!(kappa > 0 && kappa <= kappa_cmp(beta) * (1 + 1e-12)))
        throw DomainError("cmp: need 0 < kappa <= 1/sqrt2 + sqrt2/beta");
    auto mu = MeasureSpec::gaussian();
    double e = 2 * beta / (beta + 2);
    InequalityReport r;
    r.inequality_id = "cmp";
    r.function_tag = f.tag().str();
    r.params = {{"beta", beta}, {"kappa", kappa}, {"observation_only", 1.0}};
    double kb = std::pow(kappa, -beta);
    double lm = log_or_inf(
        [&] {
            return log_exp_moment(
                [&](double x) { return kb * std::pow(std::abs(f.deriv(x)), beta); }, mu, q,
                abs_breaks(f));
        },
        &r.quadrature_error);
    double m = weighted_integral(f, mu, q).value;
    double lo = log_or_inf(
        [&] {
            return log_exp_moment([&](double x) { return std::pow(std::abs(f(x) - m), e); }, mu, q,
                                  abs_breaks(f, m));
        },
        &r.quadrature_error);
    r.lhs = std::exp(lm);
    r.rhs = std::exp(lo);
    r.margin = 0;
    r.vacuous = std::isinf(lm);
    r.satisfied = r.vacuous || std::isfinite(r.rhs);
    return r;
}

} // namespace funkineq

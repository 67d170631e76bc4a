#include "funkineq/checkers/pipeline.hpp"

#include "funkineq/checkers/checkers.hpp"
#include "funkineq/conjugates/conjugates.hpp"
#include "funkineq/core/measure.hpp"
#include "funkineq/core/special.hpp"
#include "funkineq/rearrangement/hardy.hpp"
#include "funkineq/rearrangement/rearrangement.hpp"

#include <cmath>
#include <sstream>

namespace funkineq {

namespace {

std::string num(double v, int prec = 10)
{
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

double log_add_exp(double a, double b)
{
    double m = std::max(a, b);
    if (std::isinf(m))
        return m;
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double log_reduction_G(double t) { return 0.5 * t * t - 0.5 * std::log1p(0.5 * t * t); }

} // namespace

double reduction_G(double x) { return std::exp(log_reduction_G(x)); }

HardyReductionConstants HardyReductionConstants::compute()
{
    HardyReductionConstants k{};
    k.a = std::exp(kExpHardyConstant) / std::sqrt(2 * kPi);
    k.b = std::sqrt(2 * kPi);
    k.c = 0.5;
    auto best = golden_max([](double x) { return x / reduction_G(x); }, 0.0, 5.0, 1e-12);
    k.argmax = best.x;
    k.A = hardy_constant_gaussian();
    k.d = k.A * best.value;
    return k;
}

PipelineResult reduction_pipeline(const Function1D& g0, const QuadratureConfig& q)
{
    auto K = HardyReductionConstants::compute();
    auto mu = MeasureSpec::gaussian();
    PipelineResult out;
    out.audit.name = "reduction";
    double mean = weighted_integral(g0, mu, q).value;
    Function1D g = g0.plus(-mean);
    const auto& ks = g.kinks();

    // F(x) = a e^{bx} - c and F_2 = F(x) + F(0) since F is convex
    auto F = [&](double x) { return K.a * std::exp(K.b * x) - K.c; };

    auto split = monotone_split(g);
    for (const auto& it : split.checks.items)
        out.audit.items.push_back(it);

    // half-line hypothesis on f_+ and f_- (both start at 0)
    double sqrt2pi = std::sqrt(2 * kPi);
    double Gsum = 0;
    const char* names[] = {"base-f-plus", "base-f-minus"};
    const Function1D* parts[] = {&split.f_plus, &split.f_minus};
    for (int s = 0; s < 2; ++s) {
        const Function1D& f = *parts[s];
        double lhs = std::exp(halfline_log_exp([&](double x) { return f(x); }, q, f.kinks()).log_value) /
                  sqrt2pi -
              0.5;
        double iG = std::exp(halfline_log_exp([&](double x) { return log_reduction_G(std::abs(f.deriv(x))); },
                                              q, f.kinks())
                                 .log_value) /
                    sqrt2pi;
        Gsum += iG;
        double rhs = F(iG);
        out.audit.add(names[s], "int_0 e^f - 1/2 <= F(int_0 G(f'))", rhs - lhs, 1e-6,
                      rhs - lhs >= -1e-6);
    }

    double iG = std::exp(log_exp_moment([&](double x) { return log_reduction_G(std::abs(g.deriv(x))); },
                                        mu, q, ks)
                             .log_value);
    double iabs =
        weighted_integral([&](double x) { return std::abs(g.deriv(x)); }, mu, q, abs_breaks(g)).value;
    out.audit.add("split-mass", "int_0 G(f_+') + int_0 G(f_-') <= int G(|g'|)", iG - Gsum, 1e-6,
                  iG - Gsum >= -1e-6);

    auto F2n = f2(F, iG);
    double F2c = F(iG) + F(0);
    out.audit.add("f2-convex", "F_2(x) = F(x) + F(0)", F2n.convex_defect,
                  1e-8 * std::max(1.0, F2c), F2n.convex_defect <= 1e-8 * std::max(1.0, F2c));
    out.audit.add("f2-le-2f", "F_2 <= 2F", F2n.value, 0, F2n.within_2F);
    out.audit.add("d", "sqrt(pi/2) max x/G(x) ~ 0.9602 <= 1", K.d, 1e-3,
                  K.d >= 0.960 && K.d <= 0.961);

    double lhs = log_exp_moment([&](double x) { return g(x); }, mu, q, ks).log_value;

    InequalityReport& fb = out.final_bound;
    fb.inequality_id = "reduction-final";
    fb.function_tag = g0.tag().str();
    fb.lhs = lhs;
    fb.rhs = log_add_exp(0.0, K.A * iabs + std::log(F2c));
    fb.params = {{"A", K.A}, {"int_abs_g'", iabs}, {"int_G", iG}, {"F2", F2c}};
    fb.settle();

    InequalityReport& e13 = out.eq13;
    e13.inequality_id = "reduction-13";
    e13.function_tag = g0.tag().str();
    e13.lhs = lhs;
    e13.rhs = log_add_exp(log_add_exp(0.0, std::log(K.a) + (K.d + K.b) * iG),
                          std::log(K.a - 2 * K.c) + K.d * iG);
    e13.params = {{"a", K.a}, {"b", K.b}, {"c", K.c}, {"d", K.d}, {"int_G", iG}};
    e13.settle();
    return out;
}

InequalityReport reduction_pipeline_check(const Function1D& g, const QuadratureConfig& q)
{
    auto res = reduction_pipeline(g, q);
    InequalityReport r = res.final_bound;
    r.params["margin_13"] = res.eq13.margin;
    r.params["audit_pass"] = res.audit.pass() ? 1 : 0;
    r.satisfied = r.satisfied && res.eq13.satisfied && res.audit.pass();
    return r;
}

AuditReport constants_audit()
{
    AuditReport r;
    r.name = "constants";
    auto gauss = WeightTriple::gauss();

    double A0 = h_inverse(gauss, 1.0);
    r.add("a0", "A0 = H^{-1}(1) in (2.13, 2.14)", A0, 0.005, A0 > 2.13 && A0 < 2.14);
    double x0 = w_inverse(gauss, 0.0);
    r.add("x0", "x0 = W^{-1}(0) in (1.05, 1.06)", x0, 0.005, x0 > 1.05 && x0 < 1.06);

    auto K = HardyReductionConstants::compute();
    r.add("d", "d = sqrt(pi/2) max x/G(x) in [0.960, 0.961]", K.d, 0.0005,
          K.d >= 0.960 && K.d <= 0.961);
    double root = std::pow(2.0, 0.25);
    r.add("d-argmax", "argmax x/G(x) = 2^{1/4}", K.argmax, 1e-4, std::abs(K.argmax - root) <= 1e-4);
    double dclosed = kSqrtHalfPi * std::sqrt(1 + std::sqrt(2.0)) * std::exp(-1 / std::sqrt(2.0));
    r.add("d-closed-form", "d = sqrt(pi/2) sqrt(1+sqrt2) e^{-1/sqrt2}", K.d - dclosed, 1e-10,
          std::abs(K.d - dclosed) <= 1e-10);
    r.add("d-plus-b", "d + b ~ 3.467 <= 3.5", K.d + K.b, 0, K.d + K.b <= 3.5);

    double t0 = std::sqrt(2 * gauss.W(4.0));
    r.add("t0", "t0 = sqrt(2 W(4)) in [4.056, 4.058]", t0, 0.001, t0 >= 4.056 && t0 <= 4.058);
    double ff = t0 + 1 / (0.228 * t0);
    r.add("five-fourteen", "t0 + 1/(0.228 t0) ~ 5.138 in [5.13, 5.14]", ff, 0.005,
          ff >= 5.13 && ff <= 5.14);

    // Psi(x) = log(1 + a x^{3.5} + (a-1) x)/log x
    auto Psi = [&](double x) {
        return std::log(1 + K.a * std::pow(x, 3.5) + (K.a - 1) * x) / std::log(x);
    };
    double pe = Psi(std::exp(1.0));
    r.add("psi-e", "Psi(e) <= 8", pe, 0, pe <= 8);
    double worst_inc = -1e300;
    for (int i = 1; i <= 1000; ++i) {
        double x0p = std::exp(1.0 + 3.0 * (i - 1) / 1000), x1p = std::exp(1.0 + 3.0 * i / 1000);
        worst_inc = std::max(worst_inc, Psi(x1p) - Psi(x0p));
    }
    r.add("psi-decreasing", "Psi decreasing on [e, e^4]", worst_inc, 0, worst_inc < 0);

    auto ratio = [](double x) { return (1 + x) / std::sqrt(1 + 0.5 * x * x); };
    auto s3 = grid_max(ratio, 0.0, 50.0, 5001);
    r.add("sqrt3", "1/sqrt(1+x^2/2) <= sqrt3/(1+x) on [0, 50]", s3.value, 1e-12,
          s3.value <= std::sqrt(3.0) + 1e-12);
    r.add("sqrt3-argmax", "maximum at x = 2", s3.x, 1e-6, std::abs(s3.x - 2) <= 1e-6);
    r.add("eight-sqrt3", "8 sqrt3 <= 14", 8 * std::sqrt(3.0), 0, 8 * std::sqrt(3.0) <= 14);

    double A = hardy_constant_gaussian();
    r.add("muckenhoupt", "sup_r e^{r^2/2} int_r^inf e^{-x^2/2} = sqrt(pi/2)", A, 1e-8,
          std::abs(A - kSqrtHalfPi) <= 1e-8);

    auto tech = technical_lemma_audit();
    for (const auto& it : tech.items)
        r.items.push_back(it);

    for (double beta : {1.3, 1.5, 1.8}) {
        double wc = w_critical(beta);
        r.add("w-critical-" + num(beta, 2), "W(1/(kappa beta^{1/beta})) in [1/3, 1/2]", wc, 0,
              wc >= 1.0 / 3 && wc <= 0.5);
    }
    return r;
}

} // namespace funkineq

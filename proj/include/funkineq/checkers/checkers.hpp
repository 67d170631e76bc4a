#pragma once

#include "funkineq/core/function1d.hpp"
#include "funkineq/core/measure.hpp"
#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace funkineq {

// int e^f dmu <= F(int G(|f'|) dmu) for centered f, kept in logs:
// log_F(L) = log F(e^L) and log_G(t) = log G(t).
struct BaseInequality {
    std::string name;
    std::function<double(double)> log_F;
    std::function<double(double)> log_G;

    static BaseInequality bg(double alpha, double c = 0.5);
    static BaseInequality ir();      // F = e^{10 t}, G = e^{t^2/2}/(1+t)
    static BaseInequality ir_sqrt(); // F = e^{8 t}, G = e^{t^2/2}/sqrt(1+t^2/2)
};

// kinks of f plus the points where f - level or f' change sign on [-30, 30];
// integrands built from |f - level| or |f'| are only Lipschitz there
std::vector<double> abs_breaks(const Function1D& f, double level = 0.0);

// log int e^{f - mean} dmu and log int G(|f'|) dmu; the second is +inf on divergence
double centered_log_exp(const Function1D& f, const MeasureSpec& mu, const QuadratureConfig& q,
                        double* err = nullptr);
double log_g_moment(const Function1D& f, const std::function<double(double)>& log_G,
                    const MeasureSpec& mu, const QuadratureConfig& q, double* err = nullptr);

// int e^f <= (int e^{alpha f'^2})^{c/(alpha-c)}, reported as logs
InequalityReport check_bg(const Function1D& f, double alpha, double c = 0.5,
                          const QuadratureConfig& q = {});
// log int e^f <= 10 int e^{f'^2/2}/(1+|f'|)
InequalityReport check_ir(const Function1D& f, const QuadratureConfig& q = {});
// log int e^f <= 8 int e^{f'^2/2}/sqrt(1+f'^2/2); also the 14/(1+|f'|) form,
// stored in params, and both must hold
InequalityReport check_ir_sqrt(const Function1D& f, const QuadratureConfig& q = {});
// half line, f shifted so that f(0) = 0:
// log int_0^inf e^{|f|} e^{-x^2/2} <= int_0^inf G(|f'|) e^{-x^2/2} + 5.14
InequalityReport check_exp_hardy(const Function1D& f, const QuadratureConfig& q = {});
constexpr double kExpHardyConstant = 5.14;
// log int_0^inf e^{|f|^{2b/(b+2)}} e^{-x^2/2}
//   <= (int_0^inf e^{(kappa |f'|)^b} e^{-x^2/2})^{2b/(b+2)} + c_b
InequalityReport check_beta_hardy(const Function1D& f, double beta,
                                  const QuadratureConfig& q = {});
// observation only: lhs = M = int e^{|f'|^b / kappa^b}, rhs = int e^{|f|^{2b/(b+2)}};
// satisfied means the output integral is finite
InequalityReport check_cmp(const Function1D& f, double beta, double kappa,
                           const QuadratureConfig& q = {});
double kappa_cmp(double beta); // 1/sqrt 2 + sqrt 2 / beta

} // namespace funkineq

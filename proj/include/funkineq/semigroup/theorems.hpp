#pragma once

#include "funkineq/core/function1d.hpp"
#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"

namespace funkineq {

// log P_t(e^f)(x) - P_t f(x) <= c_alpha(t) log P_t(e^{alpha Gamma f})(x)
InequalityReport theorem_bg_check(const Function1D& f, double t, double alpha, double x,
                                  const QuadratureConfig& q = {}, double rho = 1.0);
// int e^f dgamma <= (int e^{alpha Gamma f} dgamma)^{c_alpha(inf)}, f centered
InequalityReport theorem_bg_global_check(const Function1D& f, double alpha,
                                         const QuadratureConfig& q = {});

// log int e^f <= (c/(alpha-c)) int e^{alpha |Lf|}, c = 1/2, f centered
InequalityReport cmp_lf_check(const Function1D& f, double alpha, const QuadratureConfig& q = {});
// log int e^{|f|} <= (c/(e alpha) + log 2 + 2c/(alpha-c)) int e^{alpha |Lf|}
InequalityReport cmp_lf_abs_check(const Function1D& f, double alpha,
                                  const QuadratureConfig& q = {});

// int e^f dmu_p <= (int exp{alpha H(f'/2)} dmu_p)^{c/(alpha-c)}, H = max(x^2, |x|^q),
// q = p/(p-1); conditional on the assumed constant c
InequalityReport modified_lsi_conclusion_check(double p, const Function1D& f, double alpha,
                                               double c_assumed, const QuadratureConfig& q = {});

} // namespace funkineq

#pragma once

#include "funkineq/core/function1d.hpp"
#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"

#include <vector>

namespace funkineq {

struct OUPoint {
    double t = 0;
    double x = 0;
    double rho = 1;
};

// P_t f(x) = int f(e^{-rho t} x + sqrt((1 - e^{-2 rho t})/rho) y) dgamma(y)
double mehler_apply(const RealFn& f, double t, double x, const QuadratureConfig& q,
                    double rho = 1.0, const std::vector<double>& kinks = {});
double mehler_apply(const Function1D& f, double t, double x, const QuadratureConfig& q,
                    double rho = 1.0);
// log P_t(e^h)(x)
LogIntegral mehler_log_exp(const RealFn& h, double t, double x, const QuadratureConfig& q,
                           double rho = 1.0, const std::vector<double>& kinks = {});

double gamma_of(const Function1D& f, double x); // f'(x)^2
// Gamma(P_t f)(x) by a centered difference of mehler_apply, one Richardson step
double gamma_of_semigroup(const Function1D& f, double t, double x, const QuadratureConfig& q,
                          double rho = 1.0);
double ou_generator(const Function1D& f, double x); // f'' - x f'

AuditReport commutation_check(const Function1D& f, double t, const std::vector<double>& grid,
                              const QuadratureConfig& q = {});

// Ent_{P_t}(f^2)(x) <= (2/rho)(1 - e^{-2 rho t}) P_t(Gamma f)(x), f > 0
InequalityReport local_lsi_check(const Function1D& f, double t, double x,
                                 const QuadratureConfig& q = {}, double rho = 1.0);

AuditReport hypercontractivity_monotonicity_check(const Function1D& f, double t, double p,
                                                  const std::vector<double>& s_grid,
                                                  const QuadratureConfig& q = {},
                                                  double rho = 1.0, double x0 = 0.0);
double hypercontractivity_psi(const Function1D& f, double t, double p, double s,
                              const QuadratureConfig& q, double rho = 1.0, double x0 = 0.0);

} // namespace funkineq

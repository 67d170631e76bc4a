#pragma once

#include "funkineq/conjugates/weight_triple.hpp"
#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace funkineq {

// x with W(x) = w; RangeError below W(domain_lo)
double w_inverse(const WeightTriple& t, double w);
// Gaussian case only: x with H(x) = h, h in (0, sqrt 2)
double h_inverse(const WeightTriple& t, double h);

// y (W^{-1}(log y) - 1/V'(W^{-1}(log y)))
double g_star_closed(const WeightTriple& t, double y);

// sup_{x in window} {xy - G(x)}; default window [max(lo,0), max(10, 3 log y)]
double g_star_numeric(const RealFn& G, double y, double lo = 0.0,
                      double hi = std::numeric_limits<double>::quiet_NaN());

std::vector<double> log_grid(double a, double b, int n);

// items iii, iv, sqrt-e-h, i-of-4
AuditReport technical_lemma_audit(const std::vector<double>& grid);
AuditReport technical_lemma_audit(); // 10^4 log-spaced points on [x0, 50]
double technical_I(double x);        // 2 log H / (1 + sqrt(1 + 2 log H / x^2))

AuditReport preparation_lemma_audit(double beta, const std::vector<double>& grid);
AuditReport preparation_lemma_audit(double beta);
double w_critical(double beta); // W(1/(kappa beta^{1/beta}))

// xy <= G(x) + G*(y) with G* numeric
AuditReport fenchel_young_check(const RealFn& G, const std::vector<std::pair<double, double>>& samples,
                                double lo = 0.0);

} // namespace funkineq

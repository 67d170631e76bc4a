#pragma once

#include "funkineq/checkers/checkers.hpp"

#include <Eigen/Dense>

namespace funkineq {

// nu = (h/Z) dgamma with a <= h <= b; asserts
// int e^f dnu <= 1 + b' F((1/a') int G(|f'|) dnu), a' = a/Z, b' = b/Z, f centered under nu
InequalityReport holley_stroock_transfer(const BaseInequality& base, const Function1D& h,
                                         double a, double b, const Function1D& f,
                                         const QuadratureConfig& q = {});

// monotone transport T = F_mu^{-1} o Phi tabulated on a grid
struct Transport1D {
    Eigen::VectorXd x;
    Eigen::VectorXd T;
    double lipschitz; // max |dT/dx| over the grid
};
Transport1D monotone_transport(const MeasureSpec& mu, double xmax = 5.0, int n = 201);

// mu = e^{-V} dgamma with V convex; checks T is 1-Lipschitz (NotLogConcave otherwise) and
// asserts int e^g dmu <= F(int G(|g'|) dmu) for centered g
InequalityReport contraction_transfer_1d(const MeasureSpec& mu, const BaseInequality& base,
                                         const Function1D& g, const QuadratureConfig& q = {});

// maximal median inf{t : gamma(g > t) <= 1/2}
double maximal_median(const Function1D& g);
// g shifted to median zero: log int e^g <= (a + 2c) int e^{g'^2/2}/(1+|g'|)
InequalityReport median_variant_check(const Function1D& g, double a = 10.0,
                                      double c_cheeger = -1.0, const QuadratureConfig& q = {});

} // namespace funkineq

#pragma once

#include "funkineq/core/function1d.hpp"

#include <string>
#include <utility>
#include <vector>

namespace funkineq {

// Test-function families. Members are not mean-normalized; the checkers
// subtract the quadrature mean themselves.
namespace family {

Function1D quadratic_capped(double N); // min(|x|, N)^2 / 2
Function1D linear(double a);
Function1D abs_smoothed(double eps);   // sqrt(x^2 + eps^2) - eps
Function1D sin_scaled(double a);       // a sin x
// piecewise linear through (x_i, y_i), flat outside
Function1D piecewise(std::vector<std::pair<double, double>> knots);
// sum_k c_k He_k(x)/sqrt(k!), k = 1, 2, ...
Function1D hermite_mix(std::vector<double> coeffs);

} // namespace family

struct FamilySpec {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    bool mean_normalized = false;
};

// builds a member from a family name and named parameters; DomainError on unknown names
Function1D make_member(const FamilySpec& spec);

// quadratic-capped N in {1,2,3}, linear a in {0.2,0.5,1}, sin-scaled a in {0.5,1},
// hermite-mix (0.3,0.2) and (0.2,0.3), abs-smoothed eps in {0.5,1}
std::vector<Function1D> default_suite();
// members with a continuous second derivative (for |Lf| and local checks)
std::vector<Function1D> smooth_suite();
// x -> f(x) - mean under the standard Gaussian
Function1D mean_normalize(const Function1D& f);

} // namespace funkineq

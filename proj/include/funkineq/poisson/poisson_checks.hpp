#pragma once

#include "funkineq/core/report.hpp"
#include "funkineq/poisson/chain.hpp"

#include <vector>

namespace funkineq {

// log sum e^f pi <= (c_lsi / (alpha - c_lsi)) sum e^{alpha |Lf|} pi, f centered first.
// c_lsi <= 0 selects the default c_lsi = lambda.
InequalityReport theorem_51_check(const ChainSpec& c, const DiscreteFunction& f, double alpha,
                                  double c_lsi = 0);

struct PoissonConstants {
    double lambda;
    double c;          // log of the majorant series
    double d;          // 1 + A sup x/G(x)
    double A;          // discrete Hardy constant
    double sup_ratio;  // sup x/G(x)
    long n_exact;      // terms summed exactly
    double tail_bound; // bound on the series beyond n_exact
    double series;     // pi(0) + sum_{n=1}^{n_exact} ..., without the tail
};
PoissonConstants constants_cd_estimate(double lambda);

// f(0) = 0: log sum e^{|f|} pi <= c + d sum G(|grad f|) pi.
// params carry the sharper first form c + sum G(|grad f|) pi as rhs_anchored.
InequalityReport poisson_exponential_check(double lambda, const DiscreteFunction& f);
InequalityReport poisson_exponential_check(const PoissonConstants& cd, const DiscreteFunction& f);
// any f: log sum e^{|f - pi(f)|} pi <= c + d sum G(|grad f|) pi
InequalityReport poisson_centered_check(const PoissonConstants& cd, const DiscreteFunction& f);

// ten test functions on 0..K for the discrete suites; f(0) = 0 except the indicator of {0}
std::vector<DiscreteFunction> discrete_suite(long K);

} // namespace funkineq

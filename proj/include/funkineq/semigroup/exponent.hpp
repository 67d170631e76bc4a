#pragma once

#include "funkineq/core/report.hpp"

namespace funkineq {

struct ExponentParams {
    double alpha;
    double rho;
    double t;

    double a_t() const; // sqrt(2 rho alpha (e^{2 rho t} - 1))
    static double alpha_threshold(double rho, double t);
    bool admissible() const { return alpha > alpha_threshold(rho, t); }
};

// closed form; DomainError when the log argument is not positive
double c_alpha(const ExponentParams& p);
// t -> infinity limit (1/(2x)) log((x+1)/(x-1)), x = sqrt(2 rho alpha) > 1
double c_alpha_limit(double alpha, double rho);

struct IntegralIdentity {
    double closed;
    double quadrature;
    double quadrature_error;
    double rel_diff;
    bool pass;
};
// adaptive quadrature of the s-integrand on [0, t] against c_alpha
IntegralIdentity integral_identity_check(double rho, double alpha, double t,
                                         double rel_tol = 1e-9);

// (1/(2x)) log((x+1)/(x-1)) <= log(x^2/(x^2-1)) <= 1/(x^2-1) on n points x in (1, 10]
AuditReport exponent_chain_check(int n = 100);

} // namespace funkineq

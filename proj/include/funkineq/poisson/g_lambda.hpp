#pragma once

#include "funkineq/core/report.hpp"

#include <vector>

namespace funkineq {

// G(x) = x on [0,1], exp{lambda (x + (1 + 2/x) log(lambda x)) e^x} on (1, inf)
// log G; -inf at x = 0
double g_lambda_log(double lambda, double x);
// throws Overflow when G leaves the double range
double g_lambda(double lambda, double x);

// sup_{x>0} {x - G(x) e^{-L}} = G*(e^L) / e^L. With L = -log pi(k) this is pi(k) G*(1/pi(k)),
// which stays O(log k) while 1/pi(k) overflows.
struct StarPoint {
    double value;
    double argmax;
};
StarPoint g_lambda_star_scaled(double lambda, double log_y);
// G*(y) = sup_{x>0}{xy - G(x)}, y >= 0; throws Overflow if y G*(y)/y does
double g_lambda_star(double lambda, double y);

// sup_{x>0} x / G(x)
StarPoint g_lambda_inverse_ratio(double lambda);

struct GStarBoundRow {
    long k;
    double lhs;    // pi(k) G*(1/pi(k))
    double rhs;    // log k - log lambda - 1/k + 3/(k log k)
    double margin; // rhs - lhs
};

struct GStarBoundReport {
    double lambda;
    std::vector<GStarBoundRow> rows;
    long k_min = -1;     // smallest k with margin >= 0 from there to the end of the range; -1 if none
    bool pass = false;   // k_min found
    bool margins_increasing_from_k_min = false;
};

// k runs over [k_lo, k_hi], k_lo >= 2
GStarBoundReport g_star_bound_check(double lambda, long k_lo, long k_hi);

// Phi_o(x) = x log x (x >= e), Phi_1(x) = (1 + 1/log log x) x log x (x >= e^2)
double phi_o(double x);
double phi_1(double x);
double phi_o_inverse(double x);
double phi_1_inverse(double x); // x >= phi_1(e^2)

// x/log x <= Phi_o^{-1}(x) and Phi_1^{-1}(x) <= (x/log x)(1 + 1/log x) on the grid.
// Points below phi_1(e^2) are outside the range of Phi_1 and only carry the Phi_o item.
AuditReport phi_lemma_check(const std::vector<double>& x_grid);
// n log-spaced points in [e^2, e^20]
std::vector<double> phi_default_grid(int n = 60);

} // namespace funkineq

#pragma once

#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"

#include <string>
#include <vector>

namespace funkineq {

struct FalsifyRow {
    double N;
    double lhs;        // log int e^{f_N} dgamma
    double rhs;        // int e^{f_N'^2/2} / H(|f_N'|) dgamma
    double gap;        // lhs - rhs
    double lhs_bound;  // log(2N) - 1
    double rhs_bound;  // 2 int_0^N dt/H + 1
};

struct FalsifyReport {
    std::string h_name;
    std::vector<FalsifyRow> rows;
    bool strictly_increasing;
    double last_ratio; // (rhs_N - rhs_{N/2}) / (lhs_N - lhs_{N/2}) over the last step
    bool divergent;
    AuditReport bounds; // lhs >= log(2N)-1 and rhs <= 2 int 1/H + 1 at every N
};

// f_N = min(|x|, N)^2/2 against F = identity. H is clamped below by 1.
FalsifyReport falsify_h(const RealFn& H, const std::vector<double>& N_list,
                        const std::string& h_name = "H", const QuadratureConfig& q = {});

// exact int e^{f_N} dgamma = 2N/sqrt(2 pi) + 2 e^{N^2/2} (1 - Phi(N)), in logs
double capped_quadratic_log_exp(double N);

} // namespace funkineq

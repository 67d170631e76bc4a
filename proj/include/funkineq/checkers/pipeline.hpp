#pragma once

#include "funkineq/core/function1d.hpp"
#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"

namespace funkineq {

// G(x) = e^{x^2/2}/sqrt(1 + x^2/2) and the exponential F(x) = a e^{bx} - c obtained
// from the half-line inequality with constant 5.14
struct HardyReductionConstants {
    double a, b, c;
    double d;        // sqrt(pi/2) max x/G(x)
    double argmax;   // where x/G(x) peaks
    double A;        // Hardy constant sqrt(pi/2)
    static HardyReductionConstants compute();
};
double reduction_G(double x);

struct PipelineResult {
    InequalityReport final_bound; // int e^g <= 1 + e^{A int |g'|} F_2(int G(|g'|)), logs
    InequalityReport eq13;        // ... <= 1 + a e^{(d+b) int G} + (a-2c) e^{d int G}, logs
    AuditReport audit;            // split, base hypothesis on f_+-, F_2 assembly, d
};
PipelineResult reduction_pipeline(const Function1D& g, const QuadratureConfig& q = {});
// final_bound, failing unless eq13 and every audit item also hold
InequalityReport reduction_pipeline_check(const Function1D& g, const QuadratureConfig& q = {});

// the full constants table: a0, x0, d, d-argmax, d-plus-b, t0, five-fourteen, psi-e,
// psi-decreasing, sqrt3, sqrt3-argmax, eight-sqrt3, muckenhoupt, sqrt-e-h, i-of-4,
// iii, iv, w-critical-{1.3,1.5,1.8}
AuditReport constants_audit();

} // namespace funkineq

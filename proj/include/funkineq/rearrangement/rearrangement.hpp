#pragma once

#include "funkineq/core/function1d.hpp"
#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"

#include <Eigen/Dense>

#include <memory>
#include <vector>

namespace funkineq {

// Tabulated non-decreasing rearrangement: levels v_j, knots x_j = Phi^{-1}(gamma(f <= v_j)),
// and the mass between consecutive knots. f*' lives on a uniform resampling ux with cell
// masses umass.
struct RearrangementTable {
    Eigen::VectorXd x;
    Eigen::VectorXd value;
    Eigen::VectorXd mass;
    Eigen::VectorXd ux;
    Eigen::VectorXd uslope; // centered differences, 0 on the two boundary cells
    Eigen::VectorXd umass;

    double eval(double t) const;
    double deriv(double t) const;
};

struct Rearranged {
    Function1D fstar;
    std::shared_ptr<const RearrangementTable> table;
};

// f* = inf{a : Phi(x) <= gamma(f <= a)}: grid_size uniform levels over the range of f on
// [-R, R], refined where the interpolant misses by more than 1/(8 grid_size) in mass
Rearranged gaussian_rearrangement(const Function1D& f, int grid_size = 4096, double R = 10.0);

// gamma({f > t}) from crossings of f on a fine grid over [-R, R]
double gaussian_superlevel_mass(const RealFn& f, double t, int n = 200001, double R = 10.0);
std::vector<double> gaussian_superlevel_masses(const RealFn& f, const std::vector<double>& ts,
                                               int n = 200001, double R = 10.0);

struct EquimeasurabilityResult {
    double level_defect; // max_t |gamma(f>t) - gamma(f*>t)|
    double exp_defect;   // relative gap of int e^f vs int e^{f*}
    AuditReport report;
};
EquimeasurabilityResult equimeasurability_check(const Function1D& f, const Function1D& fstar,
                                                const QuadratureConfig& q = {});

enum class Verdict { pass, needs_review, fail };
std::string verdict_name(Verdict v);

struct PolyaSzegoResult {
    double lhs; // int G(|f'|) dgamma
    double rhs; // int G(|f*'|) dgamma over the table
    double defect;
    Verdict verdict;
};
PolyaSzegoResult polya_szego_check(const Function1D& f, const RealFn& G,
                                   const Rearranged& r, const QuadratureConfig& q = {});
PolyaSzegoResult polya_szego_check(const Function1D& f, const RealFn& G, int grid_size = 4096,
                                   const QuadratureConfig& q = {});

struct MonotoneEnvelope {
    Function1D f_plus;
    Function1D f_minus;
    AuditReport checks;
};
// subtracts g(0); f_+(x) = int_0^x (g')_+, f_-(x) = int_{-x}^0 (g')_-
MonotoneEnvelope monotone_split(const Function1D& g, double R = 12.0, int cells = 2048);

struct F2Result {
    double value;
    double split; // maximizing x_1
    bool within_2F;
    double convex_defect; // |F2 - F(x) - F(0)|, meaningful when F is convex
};
// sup_{x1 + x2 = x} F(x1) + F(x2)
F2Result f2(const RealFn& F, double x);

} // namespace funkineq

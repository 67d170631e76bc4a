#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace funkineq {

enum class Scheme { gauss_hermite, adaptive_simpson, tanh_sinh, gauss_kronrod };

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& s);

struct QuadratureConfig {
    Scheme scheme = Scheme::gauss_kronrod;
    int order = 21;
    double truncation_radius = 12.0;
    double tail_epsilon = 1e-16;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    // hard cap for the radius search on slowly decaying integrands
    double max_radius = 1000.0;

    // defaults, with FUNKINEQ_QUAD_ORDER overriding order
    static QuadratureConfig from_env();
};

struct Integral {
    double value = 0;
    double error = 0;
};

// log of a positive integral, with relative error
struct LogIntegral {
    double log_value = 0;
    double rel_error = 0;
};

using RealFn = std::function<double(double)>;

// int_a^b g dx on a finite interval, split at breaks inside (a, b)
Integral integrate(const RealFn& g, double a, double b, const QuadratureConfig& q,
                   const std::vector<double>& breaks = {});

// same, but a or b may be infinite; the cut radius grows from
// truncation_radius until |g| is negligible beyond it
Integral integrate_line(const RealFn& g, double lo, double hi, const QuadratureConfig& q,
                        const std::vector<double>& breaks = {});

// log int exp(L(x)) dx, evaluated with a max-shift so that exp never overflows
LogIntegral integrate_log(const RealFn& L, double lo, double hi, const QuadratureConfig& q,
                          const std::vector<double>& breaks = {});

// probabilists' Gauss-Hermite rule (weight dgamma), weights sum to 1
struct GaussHermiteRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};
GaussHermiteRule gauss_hermite_rule(int n);

} // namespace funkineq

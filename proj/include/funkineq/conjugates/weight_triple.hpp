#pragma once

#include "funkineq/core/function1d.hpp"

#include <cmath>
#include <string>

namespace funkineq {

enum class WeightCase { gauss, beta };

double kappa_beta(double beta); // sqrt(2) beta / (beta + 2)
double c_beta(double beta);     // 5/(2-beta)^2 - log(beta - sqrt5 + 1)

// (V, V', H, W, G = e^V) for the Gaussian weight or the (kappa x)^beta weight.
// W = V + log V'; for the Gaussian case W = x^2/2 + log H as well.
class WeightTriple {
public:
    static WeightTriple gauss();
    static WeightTriple beta(double b);

    WeightCase kind() const { return kind_; }
    double beta_value() const { return beta_; }
    double kappa() const { return kappa_; }
    double domain_lo() const { return lo_; }
    std::string name() const;

    double V(double x) const;
    double Vp(double x) const;
    double Vpp(double x) const;
    double H(double x) const;
    double W(double x) const;
    double Wp(double x) const;
    double G(double x) const { return std::exp(V(x)); }

    Function1D V_fn() const;
    Function1D W_fn() const;
    Function1D H_fn() const;
    Function1D G_fn() const;

private:
    WeightCase kind_ = WeightCase::gauss;
    double beta_ = 2, kappa_ = 1, lo_ = 1e-12;
};

} // namespace funkineq

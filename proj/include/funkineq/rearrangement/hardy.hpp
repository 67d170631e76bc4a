#pragma once

#include "funkineq/core/function1d.hpp"
#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"

namespace funkineq {

double hardy_constant_gaussian(); // sup of the Mills function

struct PoissonHardy {
    double value;
    long argmax;
};
// sup_k tail(k) / pi(k) over k <= max(K(lambda), 200)
PoissonHardy hardy_constant_poisson(double lambda);

// int_0^inf |g - g(0)| dgamma <= A int_0^inf |g'| dgamma
InequalityReport hardy_l1_check(const Function1D& g, const QuadratureConfig& q = {});

} // namespace funkineq

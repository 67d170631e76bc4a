#include "funkineq/checkers/falsify.hpp"

#include "funkineq/checkers/families.hpp"
#include "funkineq/core/measure.hpp"
#include "funkineq/core/special.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace funkineq {

double capped_quadratic_log_exp(double N)
{
    // e^{N^2/2}(1 - Phi(N)) = phi(0) * mills(N), stable for large N
    double tail = mills_ratio(N) / std::sqrt(2 * kPi);
    return std::log(2 * N / std::sqrt(2 * kPi) + 2 * tail);
}

FalsifyReport falsify_h(const RealFn& H0, const std::vector<double>& N_list,
                        const std::string& h_name, const QuadratureConfig& q)
{
    auto H = [&](double t) { return std::max(1.0, H0(t)); };
    auto mu = MeasureSpec::gaussian();
    FalsifyReport out;
    out.h_name = h_name;
    out.bounds.name = "falsify-bounds";
    for (double N : N_list) {
        Function1D f = family::quadratic_capped(N);
        FalsifyRow row{};
        row.N = N;
        row.lhs = log_exp_moment([&](double x) { return f(x); }, mu, q, f.kinks()).log_value;
        // inside (-N, N) the integrand is 1/(sqrt(2 pi) H(|x|)); outside it is phi(x)/H(0)
        // the clamp max(1, H) has a kink where H crosses 1
        auto cross = sign_changes([&](double t) { return H0(t) - 1; }, 0.0, N, 4000);
        double inner = 2 * integrate([&](double t) { return 1 / H(t); }, 0.0, N, q, cross).value;
        row.rhs = inner / std::sqrt(2 * kPi) + 2 * normal_sf(N) / H(0.0);
        row.gap = row.lhs - row.rhs;
        row.lhs_bound = std::log(2 * N) - 1;
        row.rhs_bound = inner + 1;
        std::ostringstream id;
        id << "N=" << N;
        out.bounds.add(id.str() + ":lhs", ">= log(2N)-1", row.lhs - row.lhs_bound, 0,
                       row.lhs >= row.lhs_bound);
        out.bounds.add(id.str() + ":rhs", "<= 2 int_0^N 1/H + 1", row.rhs_bound - row.rhs, 0,
                       row.rhs <= row.rhs_bound);
        out.rows.push_back(row);
    }
    out.strictly_increasing = out.rows.size() >= 2;
    for (std::size_t i = 1; i < out.rows.size(); ++i)
        if (!(out.rows[i].gap > out.rows[i - 1].gap))
            out.strictly_increasing = false;
    out.last_ratio = NAN;
    if (out.rows.size() >= 2) {
        const auto& a = out.rows[out.rows.size() - 2];
        const auto& b = out.rows.back();
        out.last_ratio = (b.rhs - a.rhs) / (b.lhs - a.lhs);
    }
    // divergence: the gap keeps growing and the right side no longer keeps pace
    out.divergent = out.strictly_increasing && out.last_ratio <= 0.25;
    return out;
}

} // namespace funkineq

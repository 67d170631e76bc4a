#include "funkineq/checkers/families.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/measure.hpp"

#include <algorithm>
#include <cmath>

namespace funkineq {

namespace family {

Function1D quadratic_capped(double N)
{
    if (!(N > 0))
        throw DomainError("quadratic-capped: N must be positive");
    auto f = [N](double x) {
        double m = std::min(std::abs(x), N);
        return 0.5 * m * m;
    };
    auto df = [N](double x) { return std::abs(x) < N ? x : 0.0; };
    Function1D g(f, df, {}, {-N, N}, {"quadratic-capped", {{"N", N}}});
    g.with_second([N](double x) { return std::abs(x) < N ? 1.0 : 0.0; });
    return g;
}

Function1D linear(double a)
{
    Function1D g([a](double x) { return a * x; }, [a](double) { return a; }, {}, {},
                 {"linear", {{"a", a}}});
    g.with_second([](double) { return 0.0; });
    return g;
}

Function1D abs_smoothed(double eps)
{
    if (!(eps > 0))
        throw DomainError("abs-smoothed: eps must be positive");
    auto f = [eps](double x) { return std::hypot(x, eps) - eps; };
    auto df = [eps](double x) { return x / std::hypot(x, eps); };
    Function1D g(f, df, {}, {}, {"abs-smoothed", {{"eps", eps}}});
    g.with_second([eps](double x) {
        double r = std::hypot(x, eps);
        return eps * eps / (r * r * r);
    });
    return g;
}

Function1D sin_scaled(double a)
{
    Function1D g([a](double x) { return a * std::sin(x); },
                 [a](double x) { return a * std::cos(x); }, {}, {}, {"sin-scaled", {{"a", a}}});
    g.with_second([a](double x) { return -a * std::sin(x); });
    return g;
}

Function1D piecewise(std::vector<std::pair<double, double>> knots)
{
    if (knots.size() < 2)
        throw DomainError("piecewise: need at least two knots");
    std::sort(knots.begin(), knots.end());
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i].first > knots[i - 1].first))
            throw DomainError("piecewise: knot abscissae must be distinct");
    auto locate = [knots](double x) -> std::size_t {
        auto it = std::upper_bound(knots.begin(), knots.end(), x,
                                   [](double v, const auto& k) { return v < k.first; });
        return static_cast<std::size_t>(it - knots.begin());
    };
    auto f = [knots, locate](double x) {
        std::size_t i = locate(x);
        if (i == 0)
            return knots.front().second;
        if (i == knots.size())
            return knots.back().second;
        auto [x0, y0] = knots[i - 1];
        auto [x1, y1] = knots[i];
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    };
    auto df = [knots, locate](double x) {
        std::size_t i = locate(x);
        if (i == 0 || i == knots.size())
            return 0.0;
        return (knots[i].second - knots[i - 1].second) / (knots[i].first - knots[i - 1].first);
    };
    std::vector<double> ks;
    FamilyTag tag{"piecewise", {}};
    for (std::size_t i = 0; i < knots.size(); ++i) {
        ks.push_back(knots[i].first);
        tag.params.push_back({"x" + std::to_string(i), knots[i].first});
        tag.params.push_back({"y" + std::to_string(i), knots[i].second});
    }
    Function1D g(f, df, {}, ks, tag);
    g.with_second([](double) { return 0.0; });
    return g;
}

namespace {
// probabilists' Hermite polynomials and derivatives, He_k' = k He_{k-1}
void hermite(int n, double x, std::vector<double>& he)
{
    he.assign(n + 1, 0.0);
    he[0] = 1;
    if (n >= 1)
        he[1] = x;
    for (int k = 2; k <= n; ++k)
        he[k] = x * he[k - 1] - (k - 1) * he[k - 2];
}
} // namespace

Function1D hermite_mix(std::vector<double> coeffs)
{
    int n = static_cast<int>(coeffs.size());
    std::vector<double> scale(n + 1, 1.0);
    for (int k = 1; k <= n; ++k)
        scale[k] = scale[k - 1] * std::sqrt(static_cast<double>(k));
    auto f = [coeffs, scale, n](double x) {
        std::vector<double> he;
        hermite(n, x, he);
        double s = 0;
        for (int k = 1; k <= n; ++k)
            s += coeffs[k - 1] * he[k] / scale[k];
        return s;
    };
    auto df = [coeffs, scale, n](double x) {
        std::vector<double> he;
        hermite(n, x, he);
        double s = 0;
        for (int k = 1; k <= n; ++k)
            s += coeffs[k - 1] * k * he[k - 1] / scale[k];
        return s;
    };
    auto d2f = [coeffs, scale, n](double x) {
        std::vector<double> he;
        hermite(n, x, he);
        double s = 0;
        for (int k = 2; k <= n; ++k)
            s += coeffs[k - 1] * k * (k - 1) * he[k - 2] / scale[k];
        return s;
    };
    FamilyTag tag{"hermite-mix", {}};
    for (int k = 1; k <= n; ++k)
        tag.params.push_back({"c" + std::to_string(k), coeffs[k - 1]});
    Function1D g(f, df, {}, {}, tag);
    g.with_second(d2f);
    return g;
}

} // namespace family

namespace {
double param(const FamilySpec& s, const std::string& key, double def)
{
    for (const auto& [k, v] : s.params)
        if (k == key)
            return v;
    return def;
}
} // namespace

Function1D make_member(const FamilySpec& s)
{
    Function1D f;
    if (s.name == "quadratic-capped") {
        f = family::quadratic_capped(param(s, "N", 2));
    } else if (s.name == "linear") {
        f = family::linear(param(s, "a", 0.5));
    } else if (s.name == "abs-smoothed") {
        f = family::abs_smoothed(param(s, "eps", 0.5));
    } else if (s.name == "sin-scaled") {
        f = family::sin_scaled(param(s, "a", 1.0));
    } else if (s.name == "hermite-mix") {
        std::vector<double> c;
        for (int k = 1;; ++k) {
            double v = param(s, "c" + std::to_string(k), std::nan(""));
            if (std::isnan(v))
                break;
            c.push_back(v);
        }
        if (c.empty())
            c = {0.3, 0.2};
        f = family::hermite_mix(c);
    } else if (s.name == "piecewise") {
        std::vector<std::pair<double, double>> k;
        for (int i = 0;; ++i) {
            double x = param(s, "x" + std::to_string(i), std::nan(""));
            double y = param(s, "y" + std::to_string(i), std::nan(""));
            if (std::isnan(x) || std::isnan(y))
                break;
            k.push_back({x, y});
        }
        if (k.empty())
            k = {{-1, -1}, {0, 0}, {1, 0.5}};
        f = family::piecewise(k);
    } else {
        throw DomainError("unknown family: " + s.name);
    }
    return s.mean_normalized ? mean_normalize(f) : f;
}

std::vector<Function1D> default_suite()
{
    std::vector<Function1D> out;
    for (double N : {1.0, 2.0, 3.0})
        out.push_back(family::quadratic_capped(N));
    for (double a : {0.2, 0.5, 1.0})
        out.push_back(family::linear(a));
    for (double a : {0.5, 1.0})
        out.push_back(family::sin_scaled(a));
    out.push_back(family::hermite_mix({0.3, 0.2}));
    out.push_back(family::hermite_mix({0.2, 0.3}));
    for (double e : {0.5, 1.0})
        out.push_back(family::abs_smoothed(e));
    return out;
}

std::vector<Function1D> smooth_suite()
{
    std::vector<Function1D> out;
    for (double a : {0.2, 0.5, 1.0})
        out.push_back(family::linear(a));
    for (double a : {0.5, 1.0})
        out.push_back(family::sin_scaled(a));
    out.push_back(family::hermite_mix({0.3, 0.2}));
    out.push_back(family::hermite_mix({0.2, 0.3}));
    out.push_back(family::hermite_mix({0.4, 0.1}));
    for (double e : {0.5, 1.0})
        out.push_back(family::abs_smoothed(e));
    return out;
}

Function1D mean_normalize(const Function1D& f)
{
    QuadratureConfig q;
    double m = weighted_integral(f, MeasureSpec::gaussian(), q).value;
    FamilyTag t = f.tag();
    t.params.push_back({"mean", m});
    Function1D g = f.plus(-m);
    g.with_tag(t);
    return g;
}

} // namespace funkineq

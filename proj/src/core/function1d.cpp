#include "funkineq/core/function1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace funkineq {

bool Interval::finite() const { return std::isfinite(lo) && std::isfinite(hi); }

std::string FamilyTag::str() const
{
    if (name.empty())
        return "anonymous";
    std::ostringstream os;
    os.precision(6);
    os << name;
    if (!params.empty()) {
        os << '(';
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i)
                os << ',';
            os << params[i].first << '=' << params[i].second;
        }
        os << ')';
    }
    return os.str();
}

Function1D::Function1D(Fn f, Fn df, Interval dom, std::vector<double> kinks, FamilyTag tag)
    : f_(std::move(f)), df_(std::move(df)), dom_(dom), kinks_(std::move(kinks)),
      tag_(std::move(tag))
{
    std::sort(kinks_.begin(), kinks_.end());
}

double Function1D::second(double x) const
{
    if (d2f_)
        return d2f_(x);
    double h = 1e-5 * std::max(1.0, std::abs(x));
    return (df_(x + h) - df_(x - h)) / (2 * h);
}

Function1D& Function1D::with_second(Fn d2f)
{
    d2f_ = std::move(d2f);
    return *this;
}

Function1D& Function1D::with_tag(FamilyTag tag)
{
    tag_ = std::move(tag);
    return *this;
}

Function1D Function1D::plus(double c) const
{
    auto f = f_;
    Function1D g([f, c](double x) { return f(x) + c; }, df_, dom_, kinks_, tag_);
    g.d2f_ = d2f_;
    return g;
}

Function1D Function1D::times(double s) const
{
    auto f = f_;
    auto df = df_;
    Function1D g([f, s](double x) { return s * f(x); }, [df, s](double x) { return s * df(x); },
                 dom_, kinks_, tag_);
    if (d2f_) {
        auto d2 = d2f_;
        g.d2f_ = [d2, s](double x) { return s * d2(x); };
    }
    return g;
}

Function1D Function1D::affine_arg(double a, double b) const
{
    auto f = f_;
    auto df = df_;
    std::vector<double> ks;
    for (double k : kinks_)
        ks.push_back((k - b) / a);
    Interval dom{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    if (std::isfinite(dom_.lo) || std::isfinite(dom_.hi)) {
        double l = (dom_.lo - b) / a, h = (dom_.hi - b) / a;
        dom = {std::min(l, h), std::max(l, h)};
    }
    Function1D g([f, a, b](double x) { return f(a * x + b); },
                 [df, a, b](double x) { return a * df(a * x + b); }, dom, ks, tag_);
    if (d2f_) {
        auto d2 = d2f_;
        g.d2f_ = [d2, a, b](double x) { return a * a * d2(a * x + b); };
    }
    return g;
}

Function1D Function1D::constant(double c)
{
    return Function1D([c](double) { return c; }, [](double) { return 0.0; }, {}, {},
                      {"constant", {{"c", c}}})
        .with_second([](double) { return 0.0; });
}

Function1D Function1D::identity()
{
    return Function1D([](double x) { return x; }, [](double) { return 1.0; }, {}, {},
                      {"linear", {{"a", 1.0}}})
        .with_second([](double) { return 0.0; });
}

double derivative_defect(const Function1D& f, double lo, double hi, int n)
{
    double worst = 0;
    for (int i = 0; i < n; ++i) {
        double x = lo + (hi - lo) * (i + 0.5) / n;
        bool near_kink = false;
        for (double k : f.kinks())
            if (std::abs(x - k) < 1e-3)
                near_kink = true;
        if (near_kink)
            continue;
        double h = 1e-6 * std::max(1.0, std::abs(x));
        double fd = (f(x + h) - f(x - h)) / (2 * h);
        double d = f.deriv(x);
        worst = std::max(worst, std::abs(d - fd) / std::max(1.0, std::abs(d)));
    }
    return worst;
}

} // namespace funkineq

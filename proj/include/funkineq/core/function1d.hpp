#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace funkineq {

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double x) const { return x >= lo && x <= hi; }
    bool finite() const;
};

struct FamilyTag {
    std::string name;
    std::vector<std::pair<std::string, double>> params;

    std::string str() const;
};

// Test-function carrier: value, first derivative, optional second derivative.
class Function1D {
public:
    using Fn = std::function<double(double)>;

    Function1D() = default;
    Function1D(Fn f, Fn df, Interval dom = {}, std::vector<double> kinks = {},
               FamilyTag tag = {});

    double operator()(double x) const { return f_(x); }
    double deriv(double x) const { return df_(x); }
    // analytic when supplied, else central difference of deriv()
    double second(double x) const;
    bool has_second() const { return static_cast<bool>(d2f_); }

    Function1D& with_second(Fn d2f);
    Function1D& with_tag(FamilyTag tag);

    const Interval& domain() const { return dom_; }
    const std::vector<double>& kinks() const { return kinks_; }
    const FamilyTag& tag() const { return tag_; }

    Function1D plus(double c) const;
    Function1D times(double s) const;
    // x -> f(a x + b)
    Function1D affine_arg(double a, double b) const;

    static Function1D constant(double c);
    static Function1D identity();

private:
    Fn f_, df_, d2f_;
    Interval dom_;
    std::vector<double> kinks_;
    FamilyTag tag_;
};

// max |deriv - central FD| / max(1, |deriv|) over n points of [lo, hi],
// skipping points within 1e-3 of a kink
double derivative_defect(const Function1D& f, double lo, double hi, int n = 1000);

} // namespace funkineq

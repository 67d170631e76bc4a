#include "funkineq/conjugates/weight_triple.hpp"

#include "funkineq/core/errors.hpp"

#include <cmath>
#include <sstream>

namespace funkineq {

double kappa_beta(double beta) { return std::sqrt(2.0) * beta / (beta + 2.0); }

double c_beta(double beta)
{
    if (!(beta > std::sqrt(5.0) - 1.0 && beta < 2.0))
        throw DomainError("beta must lie in (sqrt5 - 1, 2)");
    return 5.0 / ((2.0 - beta) * (2.0 - beta)) - std::log(beta - std::sqrt(5.0) + 1.0);
}

WeightTriple WeightTriple::gauss() { return WeightTriple{}; }

WeightTriple WeightTriple::beta(double b)
{
    if (!(b > 1.0 && b < 2.0))
        throw DomainError("beta weight: beta must lie in (1,2)");
    WeightTriple t;
    t.kind_ = WeightCase::beta;
    t.beta_ = b;
    t.kappa_ = kappa_beta(b);
    return t;
}

std::string WeightTriple::name() const
{
    if (kind_ == WeightCase::gauss)
        return "gauss";
    std::ostringstream os;
    os << "beta(" << beta_ << ")";
    return os.str();
}

double WeightTriple::V(double x) const
{
    if (kind_ == WeightCase::gauss)
        return 0.5 * x * x - 0.5 * std::log1p(0.5 * x * x);
    return std::pow(kappa_ * x, beta_);
}

double WeightTriple::Vp(double x) const
{
    if (kind_ == WeightCase::gauss)
        return x * (1 + x * x) / (2 + x * x);
    return beta_ * std::pow(kappa_, beta_) * std::pow(x, beta_ - 1);
}

double WeightTriple::Vpp(double x) const
{
    if (kind_ == WeightCase::gauss) {
        double d = 2 + x * x;
        return (x * x * x * x + 5 * x * x + 2) / (d * d);
    }
    return beta_ * (beta_ - 1) * std::pow(kappa_, beta_) * std::pow(x, beta_ - 2);
}

double WeightTriple::H(double x) const
{
    if (kind_ == WeightCase::gauss)
        return std::sqrt(2.0) * x * (1 + x * x) / std::pow(2 + x * x, 1.5);
    return std::exp(W(x) - 0.5 * x * x);
}

double WeightTriple::W(double x) const
{
    if (kind_ == WeightCase::gauss)
        return 0.5 * x * x + std::log(H(x));
    return std::pow(kappa_ * x, beta_) + std::log(beta_ * std::pow(kappa_, beta_)) +
           (beta_ - 1) * std::log(x);
}

double WeightTriple::Wp(double x) const { return Vp(x) + Vpp(x) / Vp(x); }

Function1D WeightTriple::V_fn() const
{
    WeightTriple t = *this;
    return Function1D([t](double x) { return t.V(x); }, [t](double x) { return t.Vp(x); },
                      {0.0, INFINITY}, {}, {"V-" + name(), {}})
        .with_second([t](double x) { return t.Vpp(x); });
}

Function1D WeightTriple::W_fn() const
{
    WeightTriple t = *this;
    return Function1D([t](double x) { return t.W(x); }, [t](double x) { return t.Wp(x); },
                      {lo_, INFINITY}, {}, {"W-" + name(), {}});
}

Function1D WeightTriple::H_fn() const
{
    WeightTriple t = *this;
    return Function1D([t](double x) { return t.H(x); },
                      [t](double x) { return t.H(x) * (t.Wp(x) - x); }, {0.0, INFINITY}, {},
                      {"H-" + name(), {}});
}

Function1D WeightTriple::G_fn() const
{
    WeightTriple t = *this;
    return Function1D([t](double x) { return t.G(x); },
                      [t](double x) { return t.Vp(x) * t.G(x); }, {0.0, INFINITY}, {},
                      {"G-" + name(), {}});
}

} // namespace funkineq

#pragma once

#include "funkineq/core/function1d.hpp"
#include "funkineq/core/quadrature.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace funkineq {

struct Gaussian1D {};

// mu_p = Z_p^{-1} e^{-|x|^p} dx
struct SubGaussian {
    double p;
};

struct PoissonLaw {
    double lambda;
};

// density proportional to e^{-V} dgamma
struct Tilted {
    Function1D V;
    std::string name;
};

class MeasureSpec;

// density proportional to h against base, with a <= h <= b
struct Perturbed {
    std::shared_ptr<const MeasureSpec> base;
    Function1D h;
    double a, b;
};

class MeasureSpec {
public:
    using Kind = std::variant<Gaussian1D, SubGaussian, PoissonLaw, Tilted, Perturbed>;

    static MeasureSpec gaussian();
    static MeasureSpec subgaussian(double p);
    static MeasureSpec poisson(double lambda);
    static MeasureSpec tilted(Function1D V, std::string name = "tilted");
    // samples a <= h <= b on [-R, R]; DomainError otherwise
    static MeasureSpec perturbed(const MeasureSpec& base, Function1D h, double a, double b);

    const Kind& kind() const { return kind_; }
    bool is_gaussian() const { return std::holds_alternative<Gaussian1D>(kind_); }
    bool is_discrete() const { return std::holds_alternative<PoissonLaw>(kind_); }
    std::string name() const;

    // log of the normalized density w.r.t. Lebesgue (continuous kinds)
    // or counting measure (Poisson)
    double log_density(double x) const;
    Interval support() const;
    std::vector<double> breaks() const;
    // Z_p, or the normalizer of the tilt/perturbation; 1 for gaussian/poisson
    double normalization() const { return log_Z_ == 0 ? 1.0 : std::exp(log_Z_); }
    double log_normalization() const { return log_Z_; }

private:
    explicit MeasureSpec(Kind k) : kind_(std::move(k)) {}
    double raw_log_density(double x) const;

    Kind kind_;
    double log_Z_ = 0;
};

// int f dmu with error estimate
Integral weighted_integral(const RealFn& f, const MeasureSpec& mu, const QuadratureConfig& q,
                           const std::vector<double>& breaks = {});
Integral weighted_integral(const Function1D& f, const MeasureSpec& mu, const QuadratureConfig& q);

// log int e^{h} dmu, overflow-safe
LogIntegral log_exp_moment(const RealFn& h, const MeasureSpec& mu, const QuadratureConfig& q,
                           const std::vector<double>& breaks = {});

// int_0^inf f(x) e^{-x^2/2} dx (Lebesgue weight, not normalized)
Integral halfline_integral(const RealFn& f, const QuadratureConfig& q,
                           const std::vector<double>& breaks = {});
Integral halfline_integral(const Function1D& f, const QuadratureConfig& q);
// log int_0^inf e^{h(x) - x^2/2} dx
LogIntegral halfline_log_exp(const RealFn& h, const QuadratureConfig& q,
                             const std::vector<double>& breaks = {});

} // namespace funkineq

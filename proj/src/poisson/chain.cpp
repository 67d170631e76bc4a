#include "funkineq/poisson/chain.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/special.hpp"

#include <algorithm>
#include <cmath>

namespace funkineq {

namespace {

// untruncated sums run this far past K; pi(K + 400) is below 1e-300 for every K(lambda)
constexpr long kTailExtra = 400;

struct Sums {
    double entropy, gradient_form;
};

// Ent(e^f) and sum p grad e^f grad f for weights p on 0..n (edges 0..n-1)
Sums mlsi_sums(const std::vector<double>& p, const DiscreteFunction& f)
{
    long n = static_cast<long>(p.size()) - 1;
    double M = f(0);
    for (long k = 1; k <= n; ++k)
        M = std::max(M, f(k));
    double m = 0, s = 0, g = 0;
    for (long k = 0; k <= n; ++k) {
        double e = std::exp(f(k) - M);
        m += p[k] * e;
        s += p[k] * e * (f(k) - M);
        if (k < n)
            g += p[k] * (std::exp(f(k + 1) - M) - e) * f.grad(k);
    }
    double scale = std::exp(M);
    return {scale * (s - m * std::log(m)), scale * g};
}

double rel_change(double a, double b)
{
    double d = std::abs(a - b);
    double s = std::max(std::abs(a), std::abs(b));
    return s > 0 ? d / s : 0.0;
}

} // namespace

DiscreteFunction DiscreteFunction::tabulate(const std::function<double(long)>& f, long K,
                                            Tail tail, double slope, std::string tag)
{
    if (K < 10)
        throw DomainError("DiscreteFunction: K >= 10");
    DiscreteFunction d;
    d.values.resize(K + 1);
    for (long k = 0; k <= K; ++k)
        d.values[k] = f(k);
    d.tail = tail;
    d.slope = tail == Tail::linear ? slope : 0.0;
    d.tag = std::move(tag);
    return d;
}

DiscreteFunction DiscreteFunction::tabulate_linear(const std::function<double(long)>& f, long K,
                                                   std::string tag)
{
    return tabulate(f, K, Tail::linear, f(K) - f(K - 1), std::move(tag));
}

double DiscreteFunction::operator()(long k) const
{
    if (k < 0)
        throw DomainError("DiscreteFunction: k >= 0");
    long K = this->K();
    if (k <= K)
        return values[k];
    return values[K] + slope * static_cast<double>(k - K);
}

DiscreteFunction DiscreteFunction::shifted(double c) const
{
    DiscreteFunction d = *this;
    for (auto& v : d.values)
        v += c;
    return d;
}

ChainSpec ChainSpec::make(double lambda)
{
    ChainSpec c{lambda, poisson_truncation(lambda)};
    c.validate();
    return c;
}

void ChainSpec::validate() const
{
    if (!(lambda > 0))
        throw DomainError("ChainSpec: lambda > 0");
    if (K < poisson_truncation(lambda))
        throw DomainError("ChainSpec: K below K(lambda)");
}

double mm_infinity_generator(const ChainSpec& c, const DiscreteFunction& f, long k)
{
    if (k < 0 || k > c.K)
        throw DomainError("mm_infinity_generator: 0 <= k <= K");
    double v = 0;
    if (k < c.K)
        v += c.lambda * (f(k + 1) - f(k));
    if (k > 0)
        v += static_cast<double>(k) * (f(k - 1) - f(k));
    return v;
}

double mm_infinity_generator_full(double lambda, const DiscreteFunction& f, long k)
{
    double v = lambda * (f(k + 1) - f(k));
    if (k > 0)
        v += static_cast<double>(k) * (f(k - 1) - f(k));
    return v;
}

Eigen::SparseMatrix<double> generator_matrix(const ChainSpec& c)
{
    c.validate();
    long n = c.K + 1;
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(3 * n);
    for (long k = 0; k < n; ++k) {
        double birth = k < c.K ? c.lambda : 0.0;
        double death = static_cast<double>(k);
        if (birth > 0)
            t.emplace_back(k, k + 1, birth);
        if (k > 0)
            t.emplace_back(k, k - 1, death);
        t.emplace_back(k, k, -(birth + death));
    }
    Eigen::SparseMatrix<double> L(n, n);
    L.setFromTriplets(t.begin(), t.end());
    Eigen::VectorXd rows = L * Eigen::VectorXd::Ones(n);
    if (rows.cwiseAbs().maxCoeff() != 0.0)
        throw DomainError("generator_matrix: row sums must vanish");
    return L;
}

double detailed_balance_defect(double lambda, long k)
{
    double a = log_poisson_pmf(lambda, k) + std::log(lambda);
    double b = log_poisson_pmf(lambda, k + 1) + std::log(static_cast<double>(k + 1));
    return std::abs(std::expm1(b - a));
}

double matrix_balance_defect(const ChainSpec& c)
{
    auto L = generator_matrix(c);
    double worst = 0;
    for (int j = 0; j < L.outerSize(); ++j)
        for (Eigen::SparseMatrix<double>::InnerIterator it(L, j); it; ++it) {
            long x = it.row(), y = it.col();
            if (x == y)
                continue;
            double fwd = log_poisson_pmf(c.lambda, x) + std::log(it.value());
            double bwd = log_poisson_pmf(c.lambda, y) + std::log(L.coeff(y, x));
            worst = std::max(worst, std::abs(std::expm1(bwd - fwd)));
        }
    return worst;
}

std::vector<double> truncated_pmf(const ChainSpec& c)
{
    std::vector<double> p(c.K + 1);
    double z = 0;
    for (long k = 0; k <= c.K; ++k)
        z += p[k] = poisson_pmf(c.lambda, k);
    for (auto& v : p)
        v /= z;
    return p;
}

double truncated_mean(const ChainSpec& c, const DiscreteFunction& f)
{
    auto p = truncated_pmf(c);
    double m = 0;
    for (long k = 0; k <= c.K; ++k)
        m += p[k] * f(k);
    return m;
}

MlsiForm modified_lsi_form(const ChainSpec& c, const DiscreteFunction& f)
{
    c.validate();
    auto p = truncated_pmf(c);
    auto L = generator_matrix(c);

    MlsiForm r;
    Sums s = mlsi_sums(p, f);
    r.entropy = s.entropy;
    r.gradient_form = s.gradient_form;

    // the double sum, entry by entry
    for (int j = 0; j < L.outerSize(); ++j)
        for (Eigen::SparseMatrix<double>::InnerIterator it(L, j); it; ++it) {
            long x = it.row(), y = it.col();
            if (x != y)
                r.dirichlet += p[x] * it.value() * (std::exp(f(y)) - std::exp(f(x))) * (f(y) - f(x));
        }
    for (long k = 0; k <= c.K; ++k)
        r.pairing += p[k] * std::exp(f(k)) * -mm_infinity_generator(c, f, k);

    double scale = std::max({std::abs(r.dirichlet), std::abs(r.pairing), 1e-300});
    if (r.dirichlet < -1e-12 * scale)
        throw DomainError("modified_lsi_form: negative Dirichlet form");
    if (std::abs(r.dirichlet - 2 * r.pairing) > 1e-10 * scale)
        throw DomainError("modified_lsi_form: Dirichlet form != 2 int e^f (-Lf)");

    r.quotient = r.dirichlet > 0 ? r.entropy / r.dirichlet : 0.0;
    r.gradient_quotient = r.gradient_form > 0 ? r.entropy / r.gradient_form : 0.0;

    // the same sums under the full Poisson law and the tail extension
    std::vector<double> full(c.K + kTailExtra + 1);
    for (long k = 0; k < static_cast<long>(full.size()); ++k)
        full[k] = poisson_pmf(c.lambda, k);
    Sums u = mlsi_sums(full, f);
    r.truncation_defect = std::max(rel_change(u.entropy, r.entropy),
                                   rel_change(u.gradient_form, r.gradient_form));
    r.truncation_warning = r.truncation_defect > kTruncationWarnLevel;
    return r;
}

} // namespace funkineq

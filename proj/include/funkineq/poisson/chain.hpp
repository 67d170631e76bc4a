#pragma once

#include <Eigen/SparseCore>

#include <functional>
#include <string>
#include <vector>

namespace funkineq {

// f on {0, 1, ...}: a table on 0..K plus an explicit extension beyond K
struct DiscreteFunction {
    enum class Tail { constant, linear };

    std::vector<double> values;
    Tail tail = Tail::constant;
    double slope = 0; // linear tail only
    std::string tag;

    static DiscreteFunction tabulate(const std::function<double(long)>& f, long K, Tail tail,
                                     double slope, std::string tag);
    // linear tail with the slope of the last table step
    static DiscreteFunction tabulate_linear(const std::function<double(long)>& f, long K,
                                            std::string tag);

    long K() const { return static_cast<long>(values.size()) - 1; }
    double operator()(long k) const;
    double grad(long k) const { return (*this)(k + 1) - (*this)(k); }
    DiscreteFunction shifted(double c) const;
};

struct ChainSpec {
    double lambda;
    long K;

    // K = K(lambda)
    static ChainSpec make(double lambda);
    void validate() const;
};

// Lf(k) = lambda (f(k+1) - f(k)) + k (f(k-1) - f(k)) on the truncated chain:
// no death at 0, no birth out of K
double mm_infinity_generator(const ChainSpec& c, const DiscreteFunction& f, long k);
// same rates, no truncation (tail extension used at k >= K)
double mm_infinity_generator_full(double lambda, const DiscreteFunction& f, long k);

// (K+1)x(K+1) generator; throws if a row sum is not 0
Eigen::SparseMatrix<double> generator_matrix(const ChainSpec& c);

// |pi(k) lambda - pi(k+1)(k+1)| / (pi(k) lambda), pmfs from lgamma
double detailed_balance_defect(double lambda, long k);
// max over pairs of |pi(i) L(i,j) - pi(j) L(j,i)| / (pi(i) L(i,j)) on the truncated matrix
double matrix_balance_defect(const ChainSpec& c);

// pi restricted to 0..K and renormalized (stationary for the truncated chain)
std::vector<double> truncated_pmf(const ChainSpec& c);

struct MlsiForm {
    double entropy = 0;       // Ent(e^f)
    double dirichlet = 0;     // sum_{x,y} pi(x) L(x,y) (e^f(y) - e^f(x)) (f(y) - f(x))
    double pairing = 0;       // int e^f (-Lf)
    double gradient_form = 0; // sum_k pi(k) grad e^f(k) grad f(k)
    double quotient = 0;      // entropy / dirichlet (0 when both vanish)
    double gradient_quotient = 0;
    double truncation_defect = 0; // relative change against the untruncated sums
    bool truncation_warning = false;
};

inline constexpr double kTruncationWarnLevel = 1e-9;

// sums over the truncated chain; throws DomainError if dirichlet < 0 or
// dirichlet != 2 * pairing
MlsiForm modified_lsi_form(const ChainSpec& c, const DiscreteFunction& f);

// int f dpi over the truncated chain
double truncated_mean(const ChainSpec& c, const DiscreteFunction& f);

} // namespace funkineq

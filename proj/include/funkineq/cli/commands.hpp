#pragma once

#include "funkineq/checkers/families.hpp"
#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"
#include "funkineq/poisson/chain.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace funkineq::cli {

using ParamMap = std::map<std::string, double>;

struct CheckRequest {
    std::string id;
    std::string family; // empty: the default suite for this checker
    ParamMap params;    // family parameters and inequality parameters, flat
};

// bg, ir, ir-sqrt, exp-hardy, beta-hardy, cmp, bg-local, cmp-lf, mlsi-p, poisson,
// poisson-thm51, hs-transfer, contraction-1d, median
const std::vector<std::string>& registered_checkers();
bool is_registered(const std::string& id);

// one report per (function, parameter) combination; DomainError on bad params
std::vector<InequalityReport> run_check(const CheckRequest& req, const QuadratureConfig& q);

// discrete families: indicator-0, linear(a), capped(a, N), step(N), sqrt, log1p, sin(a), klog(a)
DiscreteFunction make_discrete_member(const FamilySpec& spec, long K);

// numeric flags every subcommand understands
const std::vector<std::string>& param_names();

// exit codes: 0 all pass, 1 inequality or audit failure, 2 usage error
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace funkineq::cli

#pragma once

#include "funkineq/core/report.hpp"

#include <ostream>

namespace funkineq::cli {

// constants table plus the lemma audits: Stirling bounds, the Phi lemma (one summary
// item), the exponent chain, and the empirical k_min of the G* bound for lambda in
// {0.5, 1, 5}
AuditReport full_audit();

void print_audit_table(const AuditReport& a, std::ostream& out);

} // namespace funkineq::cli

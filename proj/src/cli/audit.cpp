#include "funkineq/cli/audit.hpp"

#include "funkineq/checkers/pipeline.hpp"
#include "funkineq/cli/serialize.hpp"
#include "funkineq/core/special.hpp"
#include "funkineq/poisson/g_lambda.hpp"
#include "funkineq/semigroup/exponent.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace funkineq::cli {

AuditReport full_audit()
{
    AuditReport a = constants_audit();
    a.name = "audit";

    for (long n : {1L, 2L, 5L, 10L, 100L, 1000L}) {
        StirlingReport s = stirling_bounds_check(n);
        a.add("stirling-" + std::to_string(n), "1/(1+12n) <= log ratio <= 1/(12n)",
              std::min(s.slack_lower, s.slack_upper), 0, s.pass);
    }

    AuditReport phi = phi_lemma_check(phi_default_grid());
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& it : phi.items)
        if (it.id != "phi0-roundtrip")
            worst = std::min(worst, it.computed);
    a.add("phi-lemma", "both inverse bounds on [e^2, e^20], min slack >= 0", worst, 0, phi.pass());

    AuditReport chain = exponent_chain_check();
    for (const auto& it : chain.items)
        a.items.push_back(it);

    for (double lambda : {0.5, 1.0, 5.0}) {
        GStarBoundReport g = g_star_bound_check(lambda, 2, 200);
        char id[40];
        std::snprintf(id, sizeof id, "g-star-kmin-%g", lambda);
        a.add(id, "G* bound on [k_min, 200] for some k_min", static_cast<double>(g.k_min), 0,
              g.pass);
    }
    return a;
}

void print_audit_table(const AuditReport& a, std::ostream& out)
{
    std::size_t w = 2;
    for (const auto& it : a.items)
        w = std::max(w, it.id.size());
    for (const auto& it : a.items) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%-22s %-10s", fmt(it.computed).c_str(),
                      fmt(it.tolerance).c_str());
        out << it.id << std::string(w + 2 - it.id.size(), ' ') << (it.pass ? "pass  " : "FAIL  ")
            << buf << "  " << it.claimed << "\n";
    }
}

} // namespace funkineq::cli

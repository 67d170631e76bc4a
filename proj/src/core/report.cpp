#include "funkineq/core/report.hpp"

#include <limits>

namespace funkineq {

InequalityReport& InequalityReport::settle()
{
    margin = rhs - lhs;
    satisfied = vacuous || margin >= -tolerance;
    return *this;
}

InequalityReport& InequalityReport::set_vacuous()
{
    vacuous = true;
    rhs = std::numeric_limits<double>::infinity();
    margin = std::numeric_limits<double>::infinity();
    satisfied = true;
    return *this;
}

bool AuditReport::pass() const
{
    for (const auto& it : items)
        if (!it.pass)
            return false;
    return true;
}

void AuditReport::add(std::string id, std::string claimed, double computed, double tol, bool ok)
{
    items.push_back({std::move(id), std::move(claimed), computed, tol, ok});
}

const AuditItem* AuditReport::find(const std::string& id) const
{
    for (const auto& it : items)
        if (it.id == id)
            return &it;
    return nullptr;
}

} // namespace funkineq

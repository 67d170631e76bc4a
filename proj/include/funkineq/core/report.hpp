#pragma once

#include <map>
#include <string>
#include <vector>

namespace funkineq {

struct InequalityReport {
    std::string inequality_id;
    double lhs = 0;
    double rhs = 0;
    double margin = 0; // rhs - lhs unless the id documents otherwise
    bool satisfied = false;
    bool vacuous = false;
    std::map<std::string, double> params;
    double quadrature_error = 0;
    std::string function_tag;
    double tolerance = 1e-6;

    // margin = rhs - lhs; satisfied iff vacuous or margin >= -tolerance
    InequalityReport& settle();
    InequalityReport& set_vacuous();
};

struct AuditItem {
    std::string id;
    std::string claimed;
    double computed = 0;
    double tolerance = 0;
    bool pass = false;
};

struct AuditReport {
    std::string name;
    std::vector<AuditItem> items;

    bool pass() const;
    void add(std::string id, std::string claimed, double computed, double tol, bool ok);
    const AuditItem* find(const std::string& id) const;
};

} // namespace funkineq

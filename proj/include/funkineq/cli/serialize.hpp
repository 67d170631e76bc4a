#pragma once

#include "funkineq/core/quadrature.hpp"
#include "funkineq/core/report.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace funkineq::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// finite doubles as numbers, the rest as "inf", "-inf", "nan"
nlohmann::json number(double v);

nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const AuditItem& a);
nlohmann::json to_json(const QuadratureConfig& q);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> params;
    nlohmann::json reports = nlohmann::json::array();
    QuadratureConfig quadrature;

    nlohmann::json to_json() const;
};

// one row per report, columns in schema order; params packed as "k=v;k=v"
std::string csv_header();
std::string csv_row(const InequalityReport& r);

// %.17g, or inf/-inf/nan
std::string fmt(double v);

} // namespace funkineq::cli

#include "funkineq/cli/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace funkineq::cli {

namespace {

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"')
            o += '"';
        o += c;
    }
    return o + "\"";
}

} // namespace

std::string fmt(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json number(double v)
{
    if (std::isfinite(v))
        return v;
    return fmt(v);
}

nlohmann::json to_json(const InequalityReport& r)
{
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : r.params)
        p[k] = number(v);
    return {{"inequality_id", r.inequality_id},
            {"lhs", number(r.lhs)},
            {"rhs", number(r.rhs)},
            {"margin", number(r.margin)},
            {"satisfied", r.satisfied},
            {"vacuous", r.vacuous},
            {"params", p},
            {"quadrature_error", number(r.quadrature_error)},
            {"function_tag", r.function_tag}};
}

nlohmann::json to_json(const AuditItem& a)
{
    return {{"id", a.id},
            {"claimed", a.claimed},
            {"computed", number(a.computed)},
            {"tolerance", number(a.tolerance)},
            {"pass", a.pass}};
}

nlohmann::json to_json(const QuadratureConfig& q)
{
    return {{"scheme", scheme_name(q.scheme)},
            {"order", q.order},
            {"rel_tol", q.rel_tol},
            {"abs_tol", q.abs_tol},
            {"truncation_radius", q.truncation_radius},
            {"tail_epsilon", q.tail_epsilon}};
}

nlohmann::json RunManifest::to_json() const
{
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params)
        p[k] = v;
    return {{"schema", kSchemaVersion},
            {"command", command},
            {"params", p},
            {"reports", reports},
            {"tool_version", kToolVersion},
            {"quadrature", cli::to_json(quadrature)}};
}

std::string csv_header()
{
    return "inequality_id,lhs,rhs,margin,satisfied,vacuous,params,quadrature_error,function_tag";
}

std::string csv_row(const InequalityReport& r)
{
    std::string p;
    for (const auto& [k, v] : r.params) {
        if (!p.empty())
            p += ';';
        p += k + "=" + fmt(v);
    }
    return csv_quote(r.inequality_id) + "," + fmt(r.lhs) + "," + fmt(r.rhs) + "," +
           fmt(r.margin) + "," + (r.satisfied ? "1" : "0") + "," + (r.vacuous ? "1" : "0") +
           "," + csv_quote(p) + "," + fmt(r.quadrature_error) + "," + csv_quote(r.function_tag);
}

} // namespace funkineq::cli

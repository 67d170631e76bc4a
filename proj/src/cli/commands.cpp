#include "funkineq/cli/commands.hpp"

#include "funkineq/checkers/checkers.hpp"
#include "funkineq/checkers/falsify.hpp"
#include "funkineq/checkers/transfer.hpp"
#include "funkineq/cli/audit.hpp"
#include "funkineq/cli/expr.hpp"
#include "funkineq/cli/serialize.hpp"
#include "funkineq/core/errors.hpp"
#include "funkineq/core/measure.hpp"
#include "funkineq/poisson/poisson_checks.hpp"
#include "funkineq/semigroup/theorems.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

namespace funkineq::cli {

namespace {

using Reports = std::vector<InequalityReport>;

double get(const ParamMap& p, const std::string& k, double dflt)
{
    auto it = p.find(k);
    return it == p.end() ? dflt : it->second;
}

std::vector<double> get_or(const ParamMap& p, const std::string& k, std::vector<double> dflt)
{
    auto it = p.find(k);
    return it == p.end() ? dflt : std::vector<double>{it->second};
}

FamilySpec spec_of(const CheckRequest& r)
{
    FamilySpec s{r.family, {}, false};
    for (const auto& [k, v] : r.params)
        s.params.push_back({k, v});
    return s;
}

std::vector<Function1D> members(const CheckRequest& r, bool smooth)
{
    if (r.family.empty())
        return smooth ? smooth_suite() : default_suite();
    return {make_member(spec_of(r))};
}

std::vector<DiscreteFunction> discrete_members(const CheckRequest& r, long K)
{
    if (r.family.empty())
        return discrete_suite(K);
    return {make_discrete_member(spec_of(r), K)};
}

template <class F>
Reports each(const std::vector<Function1D>& fs, F check)
{
    Reports out;
    for (const auto& f : fs)
        out.push_back(check(f));
    return out;
}

Function1D perturbation(double amp)
{
    return Function1D([amp](double x) { return 1 + amp * std::cos(x); },
                      [amp](double x) { return -amp * std::sin(x); });
}

MeasureSpec quartic_measure()
{
    Function1D V([](double x) { return x * x * x * x / 4; }, [](double x) { return x * x * x; });
    V.with_second([](double x) { return 3 * x * x; });
    return MeasureSpec::tilted(V, "quartic");
}

using Runner = std::function<Reports(const CheckRequest&, const QuadratureConfig&)>;

const std::vector<std::pair<std::string, Runner>>& registry()
{
    static const std::vector<std::pair<std::string, Runner>> r = {
        {"bg",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             double alpha = get(req.params, "alpha", 1.0), c = get(req.params, "c", 0.5);
             BaseInequality::bg(alpha, c); // admissibility gate
             return each(members(req, false),
                         [&](const Function1D& f) { return check_bg(f, alpha, c, q); });
         }},
        {"ir",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             return each(members(req, false), [&](const Function1D& f) { return check_ir(f, q); });
         }},
        {"ir-sqrt",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             return each(members(req, false),
                         [&](const Function1D& f) { return check_ir_sqrt(f, q); });
         }},
        {"exp-hardy",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             return each(members(req, false),
                         [&](const Function1D& f) { return check_exp_hardy(f, q); });
         }},
        {"beta-hardy",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             Reports out;
             for (double b : get_or(req.params, "beta", {1.3, 1.5, 1.8}))
                 for (const auto& f : members(req, false))
                     out.push_back(check_beta_hardy(f, b, q));
             return out;
         }},
        {"cmp",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             double b = get(req.params, "beta", 1.5);
             double k = get(req.params, "kappa", kappa_cmp(b));
             return each(members(req, false),
                         [&](const Function1D& f) { return check_cmp(f, b, k, q); });
         }},
        {"bg-local",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             Reports out;
             double alpha = get(req.params, "alpha", 1.0), rho = get(req.params, "rho", 1.0);
             for (double t : get_or(req.params, "t", {0.5, 1.0}))
                 for (double x : get_or(req.params, "x", {0.0, 1.0}))
                     for (const auto& f : members(req, false))
                         out.push_back(theorem_bg_check(f, t, alpha, x, q, rho));
             return out;
         }},
        {"cmp-lf",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             Reports out;
             for (double alpha : get_or(req.params, "alpha", {1.0, 2.0}))
                 for (const auto& f : members(req, true))
                     out.push_back(cmp_lf_check(f, alpha, q));
             return out;
         }},
        {"mlsi-p",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             double p = get(req.params, "p", 1.5), alpha = get(req.params, "alpha", 2.0);
             double c = get(req.params, "c-assumed", 1.0);
             return each(members(req, false), [&](const Function1D& f) {
                 return modified_lsi_conclusion_check(p, f, alpha, c, q);
             });
         }},
        {"poisson",
         [](const CheckRequest& req, const QuadratureConfig&) {
             Reports out;
             for (double lambda : get_or(req.params, "lambda", {0.5, 1.0, 2.0})) {
                 PoissonConstants cd = constants_cd_estimate(lambda);
                 for (const auto& f : discrete_members(req, ChainSpec::make(lambda).K))
                     out.push_back(poisson_exponential_check(cd, f.shifted(-f(0))));
             }
             return out;
         }},
        {"poisson-thm51",
         [](const CheckRequest& req, const QuadratureConfig&) {
             Reports out;
             for (double lambda : get_or(req.params, "lambda", {0.5, 1.0, 2.0})) {
                 ChainSpec c = ChainSpec::make(lambda);
                 double cl = get(req.params, "c-lsi", lambda);
                 double alpha = get(req.params, "alpha", cl + 1);
                 for (const auto& f : discrete_members(req, c.K))
                     out.push_back(theorem_51_check(c, f, alpha, cl));
             }
             return out;
         }},
        {"hs-transfer",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             double amp = get(req.params, "h-amp", 0.5);
             if (!(amp >= 0 && amp < 1))
                 throw DomainError("hs-transfer: need 0 <= h-amp < 1");
             Function1D h = perturbation(amp);
             return each(members(req, false), [&](const Function1D& f) {
                 return holley_stroock_transfer(BaseInequality::ir(), h, 1 - amp, 1 + amp, f, q);
             });
         }},
        {"contraction-1d",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             MeasureSpec mu = quartic_measure();
             return each(members(req, false), [&](const Function1D& f) {
                 return contraction_transfer_1d(mu, BaseInequality::ir(), f, q);
             });
         }},
        {"median",
         [](const CheckRequest& req, const QuadratureConfig& q) {
             double a = get(req.params, "a-median", 10.0);
             return each(members(req, false),
                         [&](const Function1D& f) { return median_variant_check(f, a, -1.0, q); });
         }},
    };
    return r;
}

// ---- command plumbing ----

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_number(const std::string& name, const std::string& s)
{
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw Usage("--" + name + ": not a number: " + s);
    }
    if (used != s.size())
        throw Usage("--" + name + ": not a number: " + s);
    return v;
}

// lo:hi:step inclusive, or a single number
std::vector<double> parse_range(const std::string& name, const std::string& s)
{
    auto c1 = s.find(':');
    if (c1 == std::string::npos)
        return {parse_number(name, s)};
    auto c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw Usage("--" + name + ": range must be lo:hi:step");
    double lo = parse_number(name, s.substr(0, c1));
    double hi = parse_number(name, s.substr(c1 + 1, c2 - c1 - 1));
    double st = parse_number(name, s.substr(c2 + 1));
    if (!(st > 0) || hi < lo)
        throw Usage("--" + name + ": need step > 0 and lo <= hi");
    long n = static_cast<long>(std::floor((hi - lo) / st + 1e-9)) + 1;
    if (n > 100000)
        throw Usage("--" + name + ": range too long");
    std::vector<double> v(n);
    for (long i = 0; i < n; ++i)
        v[i] = std::round((lo + i * st) * 1e12) / 1e12;
    return v;
}

struct Flags {
    std::map<std::string, std::string> raw;
    std::string family;
    bool json = false, csv = false;
};

void add_param_options(CLI::App* sub, Flags& fl)
{
    for (const auto& n : param_names())
        sub->add_option("--" + n, fl.raw[n], "numeric parameter " + n);
}

std::map<std::string, std::string> given(const Flags& fl)
{
    std::map<std::string, std::string> g;
    for (const auto& [k, v] : fl.raw)
        if (!v.empty())
            g[k] = v;
    return g;
}

void print_reports(const Reports& rs, std::ostream& out)
{
    for (const auto& r : rs) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-14s %-32s lhs=%-13.6g rhs=%-13.6g margin=%-13.6g ",
                      r.inequality_id.c_str(), r.function_tag.c_str(), r.lhs, r.rhs, r.margin);
        out << buf << (r.vacuous ? "vacuous" : r.satisfied ? "pass" : "FAIL") << "\n";
    }
}

bool all_ok(const Reports& rs)
{
    return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.satisfied || r.vacuous; });
}

int cmd_check(const std::string& id, const Flags& fl, std::ostream& out, std::ostream& err)
{
    if (!is_registered(id))
        throw Usage("unknown inequality id: " + id);
    CheckRequest req{id, fl.family, {}};
    auto g = given(fl);
    for (const auto& [k, v] : g)
        req.params[k] = parse_number(k, v);
    auto q = QuadratureConfig::from_env();
    Reports rs = run_check(req, q);

    if (fl.json) {
        RunManifest m{"check", g, nlohmann::json::array(), q};
        m.params["inequality"] = id;
        if (!fl.family.empty())
            m.params["family"] = fl.family;
        for (const auto& r : rs)
            m.reports.push_back(to_json(r));
        out << m.to_json().dump(2) << "\n";
    } else if (fl.csv) {
        out << csv_header() << "\n";
        for (const auto& r : rs)
            out << csv_row(r) << "\n";
    } else {
        print_reports(rs, out);
    }
    if (!all_ok(rs)) {
        Reports bad;
        for (const auto& r : rs)
            if (!r.satisfied && !r.vacuous)
                bad.push_back(r);
        err << "failed:\n";
        print_reports(bad, err);
        return 1;
    }
    return 0;
}

int cmd_audit(bool /*all*/, const std::string& only, bool json, std::ostream& out)
{
    AuditReport a = full_audit();
    if (!only.empty()) {
        const AuditItem* it = a.find(only);
        if (!it)
            throw Usage("unknown audit id: " + only);
        AuditReport one;
        one.name = a.name;
        one.items.push_back(*it);
        a = one;
    }
    if (json) {
        RunManifest m{"audit", {}, nlohmann::json::array(), QuadratureConfig::from_env()};
        m.params["id"] = only.empty() ? "all" : only;
        for (const auto& it : a.items)
            m.reports.push_back(to_json(it));
        out << m.to_json().dump(2) << "\n";
    } else {
        print_audit_table(a, out);
    }
    return a.pass() ? 0 : 1;
}

int cmd_falsify(const std::string& hsrc, double n_max, bool json, std::ostream& out)
{
    Expr H = Expr::parse(hsrc);
    if (!(n_max >= 2))
        throw Usage("--N-max must be at least 2");
    std::vector<double> Ns;
    for (double N = 2; N <= n_max; N *= 2)
        Ns.push_back(N);
    auto q = QuadratureConfig::from_env();
    FalsifyReport f = falsify_h([&](double t) { return H(t); }, Ns, hsrc, q);
    if (json) {
        RunManifest m{"falsify", {{"H", hsrc}, {"N-max", fmt(n_max)}}, nlohmann::json::array(), q};
        for (const auto& r : f.rows)
            m.reports.push_back({{"N", r.N},
                                 {"lhs", number(r.lhs)},
                                 {"rhs", number(r.rhs)},
                                 {"gap", number(r.gap)},
                                 {"lhs_bound", number(r.lhs_bound)},
                                 {"rhs_bound", number(r.rhs_bound)}});
        nlohmann::json j = m.to_json();
        j["summary"] = {{"strictly_increasing", f.strictly_increasing},
                        {"last_ratio", number(f.last_ratio)},
                        {"divergent", f.divergent},
                        {"bounds_pass", f.bounds.pass()}};
        out << j.dump(2) << "\n";
    } else {
        char buf[160];
        out << "H(t) = " << hsrc << "\n";
        out << "N      lhs          rhs          lhs - rhs\n";
        for (const auto& r : f.rows) {
            std::snprintf(buf, sizeof buf, "%-6g %-12.6f %-12.6f %-12.6f\n", r.N, r.lhs, r.rhs,
                          r.gap);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "increasing=%s last_ratio=%.4f divergent=%s bounds=%s\n",
                      f.strictly_increasing ? "yes" : "no", f.last_ratio,
                      f.divergent ? "yes" : "no", f.bounds.pass() ? "pass" : "FAIL");
        out << buf;
    }
    return f.bounds.pass() ? 0 : 1;
}

int cmd_scan(const std::string& id, const Flags& fl, std::ostream& out, std::ostream& err)
{
    if (!is_registered(id))
        throw Usage("unknown inequality id: " + id);
    auto g = given(fl);
    // cartesian product over the given parameters, keys in sorted order
    std::vector<std::string> keys;
    std::vector<std::vector<double>> axes;
    for (const auto& [k, v] : g) {
        keys.push_back(k);
        axes.push_back(parse_range(k, v));
    }
    std::size_t cells = 1;
    for (const auto& a : axes)
        cells *= a.size();
    if (cells > 1000000)
        throw Usage("scan grid too large");

    auto q = QuadratureConfig::from_env();
    std::vector<ParamMap> grid(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        std::size_t rest = c;
        for (std::size_t i = keys.size(); i-- > 0;) {
            grid[c][keys[i]] = axes[i][rest % axes[i].size()];
            rest /= axes[i].size();
        }
    }

    struct Cell {
        Reports reports;
        std::string error;
    };
    std::vector<Cell> results(cells);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c; (c = next.fetch_add(1)) < cells;) {
            try {
                results[c].reports = run_check({id, fl.family, grid[c]}, q);
            } catch (const std::exception& e) {
                results[c].error = e.what();
            }
        }
    };
    unsigned nt = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                   static_cast<unsigned>(cells)));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nt; ++i)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    // serialized assembly, in grid order
    for (const auto& k : keys)
        out << k << ",";
    out << csv_header() << ",error\n";
    int code = 0;
    for (std::size_t c = 0; c < cells; ++c) {
        std::string prefix;
        for (const auto& k : keys)
            prefix += fmt(grid[c].at(k)) + ",";
        if (!results[c].error.empty()) {
            InequalityReport blank;
            blank.inequality_id = id;
            blank.lhs = blank.rhs = blank.margin = NAN;
            std::string e = results[c].error;
            std::replace(e.begin(), e.end(), ',', ';');
            out << prefix << csv_row(blank) << "," << e << "\n";
            err << "cell " << c << ": " << results[c].error << "\n";
            code = 2;
            continue;
        }
        for (const auto& r : results[c].reports) {
            out << prefix << csv_row(r) << ",\n";
            if (!r.satisfied && !r.vacuous && code == 0)
                code = 1;
        }
    }
    return code;
}

} // namespace

const std::vector<std::string>& registered_checkers()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : registry())
            v.push_back(k);
        return v;
    }();
    return ids;
}

bool is_registered(const std::string& id)
{
    const auto& ids = registered_checkers();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<InequalityReport> run_check(const CheckRequest& req, const QuadratureConfig& q)
{
    for (const auto& [k, run] : registry())
        if (k == req.id)
            return run(req, q);
    throw DomainError("unknown inequality id: " + req.id);
}

DiscreteFunction make_discrete_member(const FamilySpec& s, long K)
{
    auto p = [&](const std::string& k, double d) {
        for (const auto& [n, v] : s.params)
            if (n == k)
                return v;
        return d;
    };
    using T = DiscreteFunction::Tail;
    auto kd = [](long k) { return static_cast<double>(k); };
    double a = p("a", 0.5), N = p("N", 3);
    std::ostringstream tag;
    tag << s.name;
    if (s.name == "indicator-0")
        return DiscreteFunction::tabulate([](long k) { return k == 0 ? 1.0 : 0.0; }, K, T::constant,
                                          0, tag.str());
    if (s.name == "linear") {
        tag << "(a=" << a << ")";
        return DiscreteFunction::tabulate([&](long k) { return a * kd(k); }, K, T::linear, a,
                                          tag.str());
    }
    if (s.name == "capped") {
        tag << "(a=" << a << ",N=" << N << ")";
        return DiscreteFunction::tabulate([&](long k) { return a * std::min(kd(k), N); }, K,
                                          T::constant, 0, tag.str());
    }
    if (s.name == "step") {
        tag << "(N=" << N << ")";
        return DiscreteFunction::tabulate([&](long k) { return kd(k) >= N ? 1.0 : 0.0; }, K,
                                          T::constant, 0, tag.str());
    }
    if (s.name == "sqrt")
        return DiscreteFunction::tabulate_linear([&](long k) { return std::sqrt(kd(k)); }, K,
                                                 tag.str());
    if (s.name == "log1p")
        return DiscreteFunction::tabulate_linear([&](long k) { return std::log1p(kd(k)); }, K,
                                                 tag.str());
    if (s.name == "sin") {
        tag << "(a=" << a << ")";
        return DiscreteFunction::tabulate([&](long k) { return a * std::sin(kd(k)); }, K,
                                          T::constant, 0, tag.str());
    }
    if (s.name == "klog") {
        tag << "(a=" << a << ")";
        return DiscreteFunction::tabulate_linear(
            [&](long k) { return a * kd(k) * std::log1p(kd(k)); }, K, tag.str());
    }
    throw DomainError("unknown discrete family: " + s.name);
}

const std::vector<std::string>& param_names()
{
    static const std::vector<std::string> n = {
        "N",    "a",     "eps",       "c1",     "c2",     "c3",    "c4",    "alpha", "c",
        "beta", "kappa", "t",         "x",      "rho",    "p",     "c-assumed",
        "lambda", "c-lsi", "h-amp",   "a-median"};
    return n;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"funkineq: numerical checks of exponential integrability inequalities"};
    app.require_subcommand(1);

    Flags check_fl, scan_fl;
    std::string check_id, scan_id;
    auto* check = app.add_subcommand("check", "run one inequality checker");
    check->add_option("inequality", check_id, "inequality id")->required();
    check->add_option("--family", check_fl.family, "test family (default: the checker's suite)");
    check->add_flag("--json", check_fl.json, "JSON report");
    check->add_flag("--csv", check_fl.csv, "CSV report");
    add_param_options(check, check_fl);

    bool audit_all = false, audit_json = false;
    std::string audit_id;
    auto* audit = app.add_subcommand("audit", "constants and lemma audit table");
    audit->add_flag("--all", audit_all, "full table (default)");
    audit->add_option("--id", audit_id, "one audit item");
    audit->add_flag("--json", audit_json, "JSON report");

    std::string hsrc;
    double n_max = 64;
    bool fals_json = false;
    auto* fals = app.add_subcommand("falsify", "capped-quadratic falsifier for H");
    fals->add_option("--H", hsrc, "H(t) expression")->required();
    fals->add_option("--N-max", n_max, "largest N (powers of 2 from 2)");
    fals->add_flag("--json", fals_json, "JSON report");

    auto* scan = app.add_subcommand("scan", "parameter grid sweep, CSV on stdout");
    scan->add_option("--inequality", scan_id, "inequality id")->required();
    scan->add_option("--family", scan_fl.family, "test family (default: the checker's suite)");
    add_param_options(scan, scan_fl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*check)
            return cmd_check(check_id, check_fl, out, err);
        if (*audit)
            return cmd_audit(audit_all, audit_id, audit_json, out);
        if (*fals)
            return cmd_falsify(hsrc, n_max, fals_json, out);
        if (*scan)
            return cmd_scan(scan_id, scan_fl, out, err);
    } catch (const Usage& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ExprError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace funkineq::cli

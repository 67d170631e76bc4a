// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include "funkineq/checkers/falsify.hpp"
#include "funkineq/checkers/pipeline.hpp"
#include "funkineq/cli/commands.hpp"
#include "funkineq/conjugates/conjugates.hpp"
#include "funkineq/core/special.hpp"
#include "funkineq/poisson/chain.hpp"
#include "funkineq/poisson/g_lambda.hpp"
#include "funkineq/poisson/poisson_checks.hpp"
#include "funkineq/rearrangement/rearrangement.hpp"
#include "funkineq/semigroup/exponent.hpp"
#include "funkineq/semigroup/semigroup.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace funkineq;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void fail(const std::string& why)
    {
        if (pass)
            note << "first failure: " << why << "; ";
        pass = false;
    }
};

std::string g6(double v)
{
    char b[32];
    std::snprintf(b, sizeof b, "%.6g", v);
    return b;
}

Function1D fn(std::function<double(double)> f, std::function<double(double)> df,
              std::vector<double> kinks = {})
{
    return Function1D(std::move(f), std::move(df), {}, std::move(kinks));
}

// --- 1
void constants(Outcome& o)
{
    AuditReport a = constants_audit();
    const char* ids[] = {"a0",           "x0",        "d",          "d-argmax",   "t0",
                         "five-fourteen", "psi-e",    "muckenhoupt", "sqrt-e-h",  "i-of-4",
                         "w-critical-1.3", "w-critical-1.5", "w-critical-1.8"};
    for (const char* id : ids) {
        const AuditItem* it = a.find(id);
        if (!it)
            o.fail(std::string("missing ") + id);
        else if (!it->pass)
            o.fail(std::string(id) + " = " + g6(it->computed));
    }
    o.note << a.items.size() << " items";
}

// --- 2
void integral_identity(Outcome& o)
{
    int admissible = 0, skipped = 0;
    double worst = 0;
    for (double rho : {0.5, 1.0, 2.0})
        for (double alpha : {0.5, 1.0, 2.0})
            for (double t : {0.5, 1.0, 2.0}) {
                if (!ExponentParams{alpha, rho, t}.admissible()) {
                    ++skipped;
                    continue;
                }
                ++admissible;
                IntegralIdentity r = integral_identity_check(rho, alpha, t, 1e-9);
                worst = std::max(worst, r.rel_diff);
                if (!(r.rel_diff <= 1e-9))
                    o.fail("rho=" + g6(rho) + " alpha=" + g6(alpha) + " t=" + g6(t));
            }
    if (admissible == 0)
        o.fail("no admissible point");
    o.note << admissible << " admissible, " << skipped << " skipped, max rel diff " << g6(worst);
}

// --- 3
void checkers(Outcome& o)
{
    QuadratureConfig q;
    int total = 0;
    std::size_t fewest = 1000;
    for (const std::string& id : cli::registered_checkers()) {
        std::vector<InequalityReport> rs = cli::run_check({id, "", {}}, q);
        std::set<std::string> tags;
        for (const auto& r : rs) {
            tags.insert(r.function_tag);
            ++total;
            if (!(r.vacuous || r.margin >= -1e-6))
                o.fail(id + " on " + r.function_tag + " margin " + g6(r.margin));
        }
        fewest = std::min(fewest, tags.size());
        if (tags.size() < 10)
            o.fail(id + " has " + std::to_string(tags.size()) + " functions");
    }
    o.note << cli::registered_checkers().size() << " checkers, " << total
           << " reports, fewest functions per checker " << fewest;
}

// --- 4
void falsify(Outcome& o)
{
    std::vector<double> Ns{2, 4, 8, 16, 32, 64};
    auto h1 = [](double t) {
        double l = std::log(std::exp(1.0) + t);
        return t * l * l;
    };
    FalsifyReport a = falsify_h(h1, Ns, "t log^2(e+t)");
    FalsifyReport b = falsify_h([](double t) { return 1 + t; }, Ns, "1+t");
    if (!a.strictly_increasing)
        o.fail("gap not strictly increasing");
    double last = a.rows.back().gap;
    if (!(last > 2.0))
        o.fail("gap at N=64 is " + g6(last));
    if (b.divergent)
        o.fail("1+t flagged divergent");
    for (const FalsifyReport* r : {&a, &b})
        for (const auto& row : r->rows)
            if (!(row.lhs >= row.lhs_bound))
                o.fail(r->h_name + " lhs below log(2N)-1 at N=" + g6(row.N));
    o.note << "gap(64) = " << g6(last) << ", ratio for 1+t = " << g6(b.last_ratio);
}

// --- 5
void semigroup(Outcome& o)
{
    QuadratureConfig q;
    auto id = Function1D::identity();
    auto sq = fn([](double x) { return x * x; }, [](double x) { return 2 * x; });
    sq.with_second([](double) { return 2.0; });
    auto sn = fn([](double x) { return std::sin(x); }, [](double x) { return std::cos(x); });
    sn.with_second([](double x) { return -std::sin(x); });
    std::vector<const Function1D*> fs{&id, &sq, &sn};

    std::mt19937 rng(20240601);
    std::uniform_real_distribution<double> time(0.05, 2.0), space(-2.0, 2.0);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        double s = time(rng), t = time(rng), x = space(rng);
        for (const Function1D* f : fs) {
            double direct = mehler_apply(*f, s + t, x, q);
            double nested =
                mehler_apply([&](double z) { return mehler_apply(*f, t, z, q); }, s, x, q);
            double d = std::abs(direct - nested);
            worst = std::max(worst, d);
            if (!(d <= 1e-7))
                o.fail("P_sP_t at s=" + g6(s) + " t=" + g6(t) + " x=" + g6(x));
        }
    }

    std::vector<double> grid;
    for (int i = 0; i <= 12; ++i)
        grid.push_back(-3 + 0.5 * i);
    for (double t : {0.3, 1.0})
        for (const Function1D* f : fs)
            if (!commutation_check(*f, t, grid, q).pass())
                o.fail("commutation at t=" + g6(t));

    std::vector<double> sg;
    for (int i = 0; i < 20; ++i)
        sg.push_back(0.95 * i / 19);
    double r5 = std::sqrt(5.0);
    auto cap = fn([](double x) { return std::min(0.2 * x * x, 1.0); },
                  [r5](double x) { return std::abs(x) < r5 ? 0.4 * x : 0.0; }, {-r5, r5});
    auto half_sin = sn.times(0.5);
    for (const Function1D* f : {&cap, &half_sin})
        if (!hypercontractivity_monotonicity_check(*f, 1.0, 1.0, sg, q).pass())
            o.fail("psi increases");
    o.note << "max |P_sP_t - P_{s+t}| " << g6(worst);
}

// --- 6
void conjugates(Outcome& o)
{
    double worst = 0;
    for (const WeightTriple& t : {WeightTriple::gauss(), WeightTriple::beta(1.5)}) {
        auto G = [&](double x) { return t.G(x); };
        for (double y : log_grid(1.0, std::exp(20.0), 50)) {
            double c = g_star_closed(t, y), n = g_star_numeric(G, y);
            double rel = std::abs(c - n) / std::max(std::abs(c), 1e-300);
            worst = std::max(worst, rel);
            if (!(rel <= 1e-7))
                o.fail(t.name() + " at y=" + g6(y));
        }
    }
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(0.0, 6.0), ly(-3.0, 12.0);
    std::vector<std::pair<double, double>> pairs;
    for (int i = 0; i < 200; ++i)
        pairs.push_back({ux(rng), std::exp(ly(rng))});
    auto g = WeightTriple::gauss();
    if (!fenchel_young_check([&](double x) { return g.G(x); }, pairs).pass())
        o.fail("Fenchel-Young slack negative");
    o.note << "max rel gap " << g6(worst) << ", 200 Fenchel-Young pairs";
}

// --- 7
void discrete(Outcome& o)
{
    double bal = 0, quot = -INFINITY;
    std::ostringstream kmins;
    for (double lambda : {0.5, 1.0, 5.0}) {
        for (long k = 0; k <= 100; ++k)
            bal = std::max(bal, detailed_balance_defect(lambda, k));
        ChainSpec c = ChainSpec::make(lambda);
        bal = std::max(bal, matrix_balance_defect(c));
        auto suite = discrete_suite(c.K);
        if (suite.size() < 10)
            o.fail("suite too small");
        for (const auto& f : suite) {
            MlsiForm m = modified_lsi_form(c, f);
            quot = std::max(quot, m.quotient - lambda);
            if (!(m.quotient <= lambda + 1e-8))
                o.fail("quotient " + g6(m.quotient) + " on " + f.tag);
        }
        GStarBoundReport g = g_star_bound_check(lambda, 2, 200);
        if (!g.pass)
            o.fail("G* bound never settles at lambda=" + g6(lambda));
        kmins << " k_min(" << g6(lambda) << ")=" << g.k_min;
    }
    if (!(bal <= 1e-12))
        o.fail("balance defect " + g6(bal));
    for (long n : {1L, 10L, 100L, 1000L})
        if (!stirling_bounds_check(n).pass)
            o.fail("Stirling n=" + std::to_string(n));
    o.note << "balance defect " << g6(bal) << ", max quotient - lambda " << g6(quot) << ","
           << kmins.str();
}

// --- 8
// least-squares slope of log defect against log2 n; -1 means the defect halves per doubling
double doubling_order(const std::vector<int>& ns, const std::vector<double>& d)
{
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        mx += std::log2(ns[i]);
        my += std::log2(d[i]);
    }
    mx /= ns.size();
    my /= ns.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        double dx = std::log2(ns[i]) - mx;
        sxy += dx * (std::log2(d[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

void rearrangement(Outcome& o)
{
    // monotone inputs are their own rearrangement
    double fix = 0;
    std::vector<Function1D> mono{
        Function1D::identity(),
        fn([](double x) { return std::tanh(x); },
           [](double x) { return 1 / (std::cosh(x) * std::cosh(x)); }),
        fn([](double x) { return x * x * x + x; }, [](double x) { return 3 * x * x + 1; }),
        fn([](double x) { return std::atan(x); }, [](double x) { return 1 / (1 + x * x); })};
    for (const auto& f : mono) {
        Rearranged r = gaussian_rearrangement(f);
        for (int i = 0; i <= 60; ++i) {
            double x = -3 + 0.1 * i;
            fix = std::max(fix, std::abs(r.fstar(x) - f(x)) / std::max(1.0, std::abs(f(x))));
        }
    }
    if (!(fix <= 1e-3))
        o.fail("fixed point deviation " + g6(fix));

    double r2 = 2.0;
    std::vector<std::pair<std::string, Function1D>> fs{
        {"x^2", fn([](double x) { return x * x; }, [](double x) { return 2 * x; })},
        {"cap2",
         fn([r2](double x) { double a = std::min(std::abs(x), r2); return a * a / 2; },
            [r2](double x) { return std::abs(x) < r2 ? x : 0.0; }, {-r2, r2})},
        {"sin", fn([](double x) { return std::sin(x); }, [](double x) { return std::cos(x); })},
        {"cos", fn([](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); })},
        {"x sin x", fn([](double x) { return x * std::sin(x); },
                       [](double x) { return std::sin(x) + x * std::cos(x); })}};
    std::vector<int> ns{512, 1024, 2048, 4096, 8192};
    std::vector<std::pair<std::string, std::function<double(double)>>> Gs{
        {"t^2", [](double t) { return t * t; }},
        {"cosh-1", [](double t) { return std::cosh(t) - 1; }}};
    double slowest = -1e9;
    int ps = 0;
    for (const auto& [name, f] : fs) {
        std::vector<double> defects;
        for (int n : ns) {
            Rearranged r = gaussian_rearrangement(f, n);
            EquimeasurabilityResult e = equimeasurability_check(f, r.fstar);
            defects.push_back(std::max(e.level_defect, 1e-300));
            if (n == 4096) {
                if (!e.report.pass())
                    o.fail(name + " equimeasurability at n=4096");
                for (const auto& [gname, G] : Gs) {
                    ++ps;
                    PolyaSzegoResult p = polya_szego_check(f, G, r);
                    if (p.verdict != Verdict::pass)
                        o.fail("Polya-Szego " + name + " with " + gname + " defect " +
                               g6(p.defect));
                }
            }
        }
        double order = doubling_order(ns, defects);
        slowest = std::max(slowest, order);
        if (!(order <= -1.0))
            o.fail(name + " level defect order " + g6(order) + " per doubling");
    }
    o.note << "fixed-point deviation " << g6(fix) << ", slowest log2 defect slope "
           << g6(slowest) << ", " << ps << " Polya-Szego pairs";
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        void (*run)(Outcome&);
    };
    const Criterion all[] = {
        {"constants table", constants},   {"integral identity", integral_identity},
        {"inequality checkers", checkers}, {"falsification", falsify},
        {"semigroup suite", semigroup},   {"conjugate suite", conjugates},
        {"discrete suite", discrete},     {"rearrangement suite", rearrangement}};
    int failed = 0, i = 0;
    for (const auto& c : all) {
        ++i;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("%s %d %-20s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", i, c.name, secs,
                    o.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", i - failed, i);
    return failed ? 1 : 0;
}

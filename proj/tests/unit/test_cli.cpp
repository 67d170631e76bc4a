#include "doctest.h"

#include "funkineq/cli/audit.hpp"
#include "funkineq/cli/commands.hpp"
#include "funkineq/cli/expr.hpp"
#include "funkineq/cli/serialize.hpp"

#include "json.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace funkineq;
using namespace funkineq::cli;
using doctest::Approx;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "funkineq");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int lines(const std::string& s)
{
    int n = 0;
    for (char c : s)
        n += c == '\n';
    return n;
}

}

TEST_SUITE("cli") {

TEST_CASE("expression grammar")
{
    Expr h = Expr::parse("t*pow(log(e+t),2)");
    double l = std::log(std::exp(1.0) + 3.0);
    CHECK(h(3.0) == Approx(3.0 * l * l).epsilon(1e-15));
    CHECK(Expr::parse("1+t")(2.0) == 3.0);
    CHECK(Expr::parse("-t/2 + sqrt(4) * exp(0)")(1.0) == Approx(1.5));
    CHECK(Expr::parse("2·pi")(0.0) == Approx(2 * std::acos(-1.0)));
    CHECK_THROWS_AS(Expr::parse("t+*2"), ExprError);
    CHECK_THROWS_AS(Expr::parse("foo(t)"), ExprError);
    CHECK_THROWS_AS(Expr::parse("(t"), ExprError);
    try {
        Expr::parse("t + )");
    } catch (const ExprError& e) {
        CHECK(std::string(e.what()).find("expression error at") == 0);
    }
}

TEST_CASE("serialization")
{
    CHECK(number(INFINITY) == "inf");
    CHECK(number(-INFINITY) == "-inf");
    CHECK(number(NAN) == "nan");
    CHECK(number(1.5) == 1.5);
    CHECK(fmt(0.1) == "0.10000000000000001");
    CHECK(csv_header() ==
          "inequality_id,lhs,rhs,margin,satisfied,vacuous,params,quadrature_error,function_tag");
    InequalityReport r;
    r.inequality_id = "bg";
    r.params = {{"alpha", 1}, {"c", 0.5}};
    r.function_tag = "linear(a=1)";
    r.settle();
    auto j = to_json(r);
    CHECK(j["inequality_id"] == "bg");
    CHECK(j["params"]["alpha"] == 1.0);
    CHECK(csv_row(r).find("alpha=1;c=0.5") != std::string::npos);
}

TEST_CASE("registry")
{
    CHECK(registered_checkers().size() == 14);
    for (const char* id : {"bg", "ir", "ir-sqrt", "exp-hardy", "beta-hardy", "cmp", "bg-local", "cmp-lf",
                           "mlsi-p", "poisson", "poisson-thm51", "hs-transfer", "contraction-1d", "median"})
        CHECK(is_registered(id));
    CHECK_FALSE(is_registered("nope"));
    QuadratureConfig q;
    auto rs = run_check({"ir", "linear", {{"a", 0.5}}}, q);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].satisfied);
    auto d = make_discrete_member({"capped", {{"a", 0.3}, {"N", 3}}}, 60);
    CHECK(d(10) == Approx(0.9));
    CHECK_THROWS(make_discrete_member({"nope", {}}, 60));
}

TEST_CASE("check command")
{
    Run a = run({"check", "ir", "--family", "linear", "--a", "0.5", "--json"});
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "check");
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["satisfied"] == true);
    for (const char* k : {"inequality_id", "lhs", "rhs", "margin", "satisfied", "vacuous", "params",
                          "quadrature_error", "function_tag"})
        CHECK(j["reports"][0].contains(k));

    Run b = run({"check", "bg", "--alpha", "0.4"});
    CHECK(b.code == 2);
    CHECK(b.err.find("alpha must exceed c=0.5") != std::string::npos);

    CHECK(run({"check", "exp-hardy", "--family", "quadratic-capped", "--N", "3"}).code == 0);
    CHECK(run({"check", "nope"}).code == 2);
    CHECK(run({"check", "ir", "--family", "nope"}).code == 2);

    Run c = run({"check", "ir", "--family", "linear", "--a", "0.5", "--csv"});
    CHECK(c.code == 0);
    CHECK(c.out.rfind(csv_header(), 0) == 0);
}

TEST_CASE("identical invocations give identical JSON")
{
    std::vector<std::string> args{"check", "poisson", "--family", "linear", "--a", "0.5", "--json"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("audit command")
{
    Run a = run({"audit", "--id", "a0"});
    CHECK(a.code == 0);
    CHECK(a.out.find("a0") != std::string::npos);
    Run j = run({"audit", "--id", "five-fourteen", "--json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("5.138") != std::string::npos);
    CHECK(run({"audit", "--id", "no-such-item"}).code == 2);
    CHECK(full_audit().pass());
}

TEST_CASE("falsify command")
{
    Run a = run({"falsify", "--H", "t*pow(log(e+t),2)", "--N-max", "64", "--json"});
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(a.out.find("\"divergent\": true") != std::string::npos);
    Run b = run({"falsify", "--H", "1+t", "--N-max", "64", "--json"});
    CHECK(b.code == 0);
    CHECK(b.out.find("\"divergent\": false") != std::string::npos);
    CHECK(run({"falsify", "--H", "t+*"}).code == 2);
}

TEST_CASE("scan command")
{
    Run a = run({"scan", "--inequality", "bg", "--alpha", "1:2:0.5"});
    CHECK(a.code == 0);
    CHECK(a.out.rfind("alpha,inequality_id", 0) == 0);
    CHECK(lines(a.out) == 1 + 3 * 12);
    Run b = run({"scan", "--inequality", "bg", "--alpha", "0.6:3:0.2", "--family", "linear", "--a", "0.1:1:0.1"});
    CHECK(b.code == 0);
    CHECK(lines(b.out) == 1 + 13 * 10);
    CHECK(run({"scan", "--inequality", "bg", "--alpha", "2:1:0.5"}).code == 2);
    CHECK(run({"scan"}).code == 2);
}

TEST_CASE("help exits cleanly")
{
    CHECK(run({"--help"}).code == 0);
}

}

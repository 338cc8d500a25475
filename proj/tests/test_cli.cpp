#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlk/cli.hpp"
#include "rlk/contfrac.hpp"
#include "rlk/notation.hpp"

using namespace rlk;
using nlohmann::json;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("notation parsing") {
    CHECK(parse_notation("C(1,1,1)") == ContinuedFraction({1, 1, 1}));
    CHECK(parse_notation("[2, -2]") == ContinuedFraction({2, -2}));
    CHECK(parse_notation("2 3 -2") == ContinuedFraction({2, 3, -2}));
    CHECK(parse_notation("c(4,4)") == ContinuedFraction({4, 4}));
    CHECK(parse_notation("[]").empty());
    CHECK(parse_notation("C()").empty());
    CHECK(parse_notation("[0, 2, 2]") == ContinuedFraction({0, 2, 2}));

    CHECK_THROWS_AS(parse_notation("2 0 2"), NotationError);
    CHECK_THROWS_AS(parse_notation(""), NotationError);
    CHECK_THROWS_AS(parse_notation("C(1,1"), NotationError);
    CHECK_THROWS_AS(parse_notation("[2, x]"), NotationError);
    try {
        parse_notation("[2, x]");
    } catch (const NotationError& e) {
        CHECK(e.column() == 5);
        CHECK(std::string(e.what()).find("column 5") != std::string::npos);
    }
}

TEST_CASE("fraction command") {
    CliRun r = run({"fraction", "C(1,1,1)"});
    CHECK(r.status == 0);
    CHECK(r.out == "3/2\n");

    r = run({"fraction", "[]"});
    CHECK(r.out == "inf\n");

    r = run({"fraction", "C(1,1,1)", "--format", "json"});
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["fraction"] == "3/2");
    CHECK(j["alpha"] == 3);
    CHECK(j["beta"] == 2);

    r = run({"fraction", "[1,-1]"});
    CHECK(r.status == 1);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("normalize command") {
    CliRun r = run({"normalize", "5/3", "--format", "json"});
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["s_applied"] == true);
    CHECK(j["expanded"] == "5/-2");
    std::vector<Int> q;
    for (const auto& v : j["quotients"]) q.emplace_back(v.get<long>());
    CHECK(evaluate(ContinuedFraction(q)) == Fraction(5, -2));

    r = run({"normalize", "5/2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("s-transform applied: no") != std::string::npos);
    CHECK(r.out.find("even expansion: [2,2]") != std::string::npos);

    // Usage and domain errors exit nonzero with one-line diagnostics.
    CHECK(run({"normalize", "4/2"}).status == 1);
    CHECK(run({"normalize", "-3/2"}).status == 1);
    CHECK(run({"normalize", "2/5"}).status == 1);
    CHECK(run({"normalize", "abc"}).status == 1);
}

TEST_CASE("conway command") {
    CliRun r = run({"conway", "[2,-2]"});
    CHECK(r.status == 0);
    CHECK(r.out.find("conway: z^2 + 1") != std::string::npos);

    // Non-even notations are expanded automatically.
    r = run({"conway", "C(1,1,1)"});
    CHECK(r.status == 0);
    CHECK(r.out.find("fraction: 3/2") != std::string::npos);
    CHECK(r.out.find("conway: z^2 + 1") != std::string::npos);

    r = run({"conway", "C(2)", "--format", "json"});
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["components"] == 2);
    CHECK(j.contains("note"));
}

TEST_CASE("alexander command") {
    CliRun r = run({"alexander", "[2,-2]"});
    CHECK(r.status == 0);
    CHECK(r.out.find("alexander: t - 1 + t^-1") != std::string::npos);

    r = run({"alexander", "C(2)"});
    CHECK(r.status == 1);
    CHECK(r.err.find("two-component link") != std::string::npos);
}

TEST_CASE("fib command") {
    CliRun r = run({"fib", "--n", "3", "--j", "3"});
    CHECK(r.status == 0);
    CHECK(r.out.find("fraction: 33/10") != std::string::npos);
    CHECK(r.out.find("conway mod 2: 1") != std::string::npos);
    CHECK(r.out.find("match: yes") != std::string::npos);
    CHECK(r.out.find("lissajous: inconclusive") != std::string::npos);

    r = run({"fib", "--n", "1", "--j", "3", "--format", "json"});
    json j = json::parse(r.out);
    CHECK(j["alpha"] == 3);
    CHECK(j["match"] == true);
    CHECK(j["lissajous"] == "obstructed");
    CHECK(j["N"] == 3);

    CHECK(run({"fib", "--n", "0", "--j", "3"}).status == 1);
    CHECK(run({"fib", "--n", "3"}).status != 0);
}

TEST_CASE("table command is deterministic and round-trips as json") {
    CliRun a = run({"table", "--n-range", "1..3", "--j-range", "1..4", "--format", "csv"});
    CliRun b = run({"table", "--n-range", "1..3", "--j-range", "1..4", "--format", "csv"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("n,j,alpha,beta,components,expansion,conway,conway_mod2,N,closed_form,"
                     "match,lissajous\n") == 0);
    // 12 rows + header, n ascending then j ascending.
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 13);
    CHECK(a.out.find("\n1,1,") != std::string::npos);
    CHECK(a.out.find("\n3,4,") != std::string::npos);

    CliRun js = run({"table", "--n-range", "1..3", "--j-range", "1..4", "--format", "json"});
    CHECK(js.status == 0);
    // Parsing and re-rendering the emitted JSON is byte-identical.
    json parsed = json::parse(js.out);
    CHECK(parsed.dump() + "\n" == js.out);
    CHECK(parsed.size() == 12);
    CHECK(parsed[0]["n"] == 1);
    CHECK(parsed[0]["j"] == 1);
    for (const auto& row : parsed) CHECK(row["match"] == true);
}

TEST_CASE("json outputs round-trip byte-identically") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"fraction", "C(3,3)", "--format", "json"},
          std::vector<std::string>{"normalize", "10/3", "--format", "json"},
          std::vector<std::string>{"conway", "C(1,1,1,1)", "--format", "json"},
          std::vector<std::string>{"alexander", "C(1,1,1,1,1,1)", "--format", "json"},
          std::vector<std::string>{"fib", "--n", "5", "--j", "6", "--format", "json"}}) {
        CliRun r = run(args);
        CHECK(r.status == 0);
        CHECK(json::parse(r.out).dump() + "\n" == r.out);
    }
}

TEST_CASE("usage errors") {
    CHECK(run({}).status != 0);
    CHECK(run({"frobnicate"}).status != 0);
    CHECK(run({"table", "--n-range", "3..1", "--j-range", "1..2"}).status == 1);
    CHECK(run({"table", "--n-range", "0..2", "--j-range", "1..2"}).status == 1);
    CHECK(run({"fraction", "C(1,1)", "--format", "csv"}).status != 0);
}

#include "doctest.h"
#include "hermorb/report.hpp"
#include "hermorb/version.hpp"

#include <set>
#include <stdexcept>

using namespace hermorb;

TEST_CASE("report serialization") {
    Report r;
    r.header = {{"tool", "hermorb"}, {"version", kVersion}, {"command", "x"}, {"parameters", {{"a", 1}}}};
    r.data = {{"v", 2}};
    r.ok = false;
    r.tsv_columns = {"c1", "c2"};
    r.tsv_rows = {{"a", "b"}, {"c", "d"}};
    CHECK(r.to_tsv() == std::string("# hermorb ") + kVersion + " command=x parameters={\"a\":1} ok=false\nc1\tc2\na\tb\nc\td\n");
    const auto j = r.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"header", "ok", "data"});
    CHECK(j["ok"] == false);
}

TEST_CASE("json helpers") {
    QMatrix m(2, 2);
    m(0, 0) = Rational(1, 2);
    m(1, 1) = Rational(-1, 3);
    const auto j = matrix_to_json(m);
    CHECK(j["den"] == 6);
    CHECK(j["num"] == json::parse("[[3,0],[0,-2]]"));
    CHECK(ttriple_to_json({1, 1, 2}) == json::parse("[1,1,2]"));
    std::vector<SemigroupTriple> g{{1, 0, {1, 0}, {}}, {0, 2, {0, 1}, {}}};
    CHECK(generators_str(g) == "(1,0|1,0) (0,2|0,1)");
}

TEST_CASE("system lists") {
    auto d = designated_systems(8);
    std::set<std::string> cases;
    for (const auto& [c, p] : d) cases.insert(c);
    CHECK(cases == std::set<std::string>{"1.4", "1.5", "1.6", "1.7"});
    for (const auto& [c, p] : d) CHECK_NOTHROW(system_for_case(c, p).validate());
    auto sw = closed_form_sweep(3);
    CHECK(sw.size() == 40);
    for (const auto& [c, p] : sw) CHECK(p.r + p.s <= 3);
}

TEST_CASE("commands are deterministic and carry their parameters") {
    auto a = cmd_semigroup("1.4", {5, 0, -1, -1}, 3).to_json().dump();
    auto b = cmd_semigroup("1.4", {5, 0, -1, -1}, 3).to_json().dump();
    CHECK(a == b);
    const auto j = cmd_semigroup("1.4", {5, 0, -1, -1}, 3).to_json();
    CHECK(j["header"]["version"] == kVersion);
    CHECK(j["header"]["command"] == "semigroup");
    CHECK(j["header"]["parameters"]["max_degree"] == 3);
    CHECK(j["ok"] == true);
    CHECK(j["data"]["generators"].size() == 5);
    CHECK(cmd_orbits("A:3:p=2", 2).to_tsv() == cmd_orbits("A:3:p=2", 2).to_tsv());
    CHECK(cmd_cg_verify(2).ok);
    CHECK(cmd_normality_all(6).ok);
}

TEST_CASE("command argument errors") {
    CHECK_THROWS_AS(cmd_pairs("E", 6), std::invalid_argument);
    CHECK_THROWS_AS(cmd_semigroup("9.9", {}, 3), std::invalid_argument);
    CHECK_THROWS_AS(cmd_orbits("A:3:p=9", 2), std::invalid_argument);
    CHECK_THROWS(cmd_triple("A:3:p=2/7.7"));
}

#include <iostream>
#include <sstream>

#include "doctest.h"
#include "fockforge/cli/app.hpp"
#include "fockforge/cli/checks.hpp"

using namespace fockforge::cli;

namespace {

struct Captured {
    int code;
    std::string out, err;
};

Captured run(std::vector<std::string> args) {
    args.insert(args.begin(), "fockforge");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    auto* o = std::cout.rdbuf(out.rdbuf());
    auto* e = std::cerr.rdbuf(err.rdbuf());
    int code = run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(o);
    std::cerr.rdbuf(e);
    return {code, out.str(), err.str()};
}

CheckParams at(int d, std::uint64_t seed = 0) {
    CheckParams p;
    p.max_degree = d;
    p.seed = seed;
    return p;
}

}  // namespace

TEST_CASE("registry") {
    const auto& reg = registry();
    CHECK(reg.size() == 12);
    for (const char* name : {"heisenberg", "virasoro", "integral-virasoro", "lehn", "reflection", "expansion", "ybe",
                             "wlattice", "kernel", "characters", "frenkel-kac", "adhm"})
        CHECK(find_check(name).name == name);
    CHECK_THROWS_AS(find_check("nope"), std::invalid_argument);
    for (const auto& c : reg) CHECK(c.quick_degree <= c.full_degree);
}

TEST_CASE("reports are deterministic and omit timing by default") {
    auto a = run_check("virasoro", at(2)), b = run_check("virasoro", at(2));
    CHECK(a.status == Status::Pass);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(!to_json(a).contains("seconds"));
    CHECK(to_json(a, true).contains("seconds"));
    CHECK(to_json(a)["params"]["max_degree"] == 2);

    auto w1 = run_check("wlattice", at(2, 5)), w2 = run_check("wlattice", at(2, 5));
    CHECK(to_json(w1).dump() == to_json(w2).dump());
    CHECK(w1.ok());
}

TEST_CASE("characters check restricted by type") {
    CheckParams p = at(6);
    p.type = "G2";
    auto r = run_check("characters", p);
    CHECK(r.ok());
    REQUIRE(r.data["level1"].size() == 1);
    CHECK(r.data["level1"][0]["multiplicities"] == Json::array({"1", "1", "2", "4", "6", "9", "16"}));
    p.type = "Q7";
    CHECK_THROWS_AS(run_check("characters", p), std::invalid_argument);
}

TEST_CASE("suite ordering does not depend on jobs") {
    auto a = run_suite(Profile::Quick, 0, 1), b = run_suite(Profile::Quick, 0, 4);
    CHECK(a.ok());
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(parse_profile("full") == Profile::Full);
    CHECK_THROWS_AS(parse_profile("medium"), std::invalid_argument);
}

TEST_CASE("command line") {
    auto c = run({"char", "--type", "G2", "--max", "4"});
    CHECK(c.code == 0);
    CHECK(Json::parse(c.out)["multiplicities"] == Json::array({"1", "1", "2", "4", "6"}));

    c = run({"char", "--type", "B2", "--max", "2", "--tsv"});
    CHECK(c.out == "type\td\tmultiplicity\nB2\t0\t1\nB2\t1\t1\nB2\t2\t3\n");

    c = run({"check", "virasoro", "--max-degree", "2"});
    CHECK(c.code == 0);
    CHECK(Json::parse(c.out)["status"] == "pass");
    CHECK(c.err.find("virasoro: pass") != std::string::npos);

    c = run({"ybe", "--degree", "2", "--seed", "1"});
    CHECK(c.code == 0);
    auto y = Json::parse(c.out);
    CHECK(y["status"] == "pass");
    CHECK(y["data"]["params"]["a"].size() == 3);

    c = run({"list", "--json", "--prefix", "rmatrix"});
    auto l = Json::parse(c.out);
    CHECK(l.size() == 3);
    CHECK(run({"list"}).out.find("frenkel-kac") != std::string::npos);

    c = run({"series", "ih", "-r", "1", "--max", "5"});
    CHECK(c.out == "1, 1, 2, 3, 5, 7\n");

    CHECK(run({"check", "nope"}).code == 2);
    CHECK(run({"check", "virasoro", "--max-degree", "x"}).code == 2);
    CHECK(run({"char", "--type", "Z9"}).code == 2);
    CHECK(run({"suite", "--profile", "medium"}).code == 2);
    CHECK(run({}).code == 2);
}

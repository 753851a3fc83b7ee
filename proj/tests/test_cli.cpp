#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"
#include "tropsl/json_io.hpp"
#include "tropsl/weight_fan.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace tropsl;

namespace {

struct Result {
    int code;
    std::string text;
    Json json() const { return Json::parse(text); }
};

Result call(std::vector<std::string> args) {
    std::ostringstream out;
    int code = cli::run(args, out);
    return {code, out.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
    auto e = call({"schur", "expand", "--lambda", "1,0,0", "-n", "3"});
    CHECK(e.code == 0);
    CHECK(e.json() == Json::parse(R"j({"coeffs": {"(1,0,0)":1, "(0,1,0)":1, "(0,0,1)":1}})j"));

    auto c = call({"fan", "compare", "--lambda", "3,2,1", "-n", "3", "--field", "qt"});
    CHECK(c.code == 0);
    CHECK(c.json() == Json::parse(R"({"hypothesis_ok": true, "fans_equal": true, "maximal_cones": 6})"));

    auto s = call({"stab", "check", "--field", "qp:5", "--point", "1,-1", "--matrix", R"([["1","1"],["0","1"]])"});
    CHECK(s.code == 0);
    CHECK(s.json() == Json::parse(R"({"stabilizes": true})"));
}

TEST_CASE("a false check still exits 0") {
    auto s = call({"stab", "check", "--field", "qp:5", "--point", "-1,1", "--matrix", R"([["1","1"],["0","1"]])"});
    CHECK(s.code == 0);
    CHECK(s.json()["stabilizes"] == false);
    auto neg = call({"fan", "compare", "--lambda", "2,1,0", "--field", "qp:2"});
    CHECK(neg.code == 0);
    CHECK(neg.json()["hypothesis_ok"] == false);
    CHECK(neg.json()["fans_equal"].is_null());
}

TEST_CASE("exit codes") {
    auto check_error = [](std::vector<std::string> args, int code, const char* kind) {
        auto r = call(std::move(args));
        CHECK(r.code == code);
        CHECK(r.json()["kind"] == kind);
        CHECK(r.json().contains("error"));
    };
    check_error({"val", "--field", "qp:5", "--element", "1/x"}, 2, "parse");
    check_error({"val", "--field", "qp:4", "--element", "1"}, 2, "parse");
    check_error({"schur", "expand", "--lambda", "1,2"}, 2, "parse");
    check_error({"schur", "expand", "--lambda", "1,0", "--frob", "1"}, 2, "usage");
    check_error({"nope"}, 2, "usage");
    check_error({"stab", "check", "--field", "qp:5", "--point", "1,-1,0", "--matrix", R"([["1","1"],["0","1"]])"}, 2,
                "dimension");
    check_error({"stab", "check", "--field", "qp:5", "--point", "1,-1", "--matrix", R"([["2","0"],["0","1"]])"}, 3,
                "precondition");
}

TEST_CASE("valuation of zero is infinite") {
    auto r = call({"val", "--field", "qp:5", "--element", "0"});
    CHECK(r.code == 0);
    CHECK(r.json()["valuation"] == "inf");
    CHECK(call({"val", "--field", "qp:5", "--element", "-50/3"}).json()["valuation"] == "2");
    CHECK(call({"val", "--field", "qt", "--element", "1/(t^2+t)"}).json()["valuation"] == "-1");
}

TEST_CASE("output is deterministic") {
    const std::vector<std::vector<std::string>> cases = {
        {"stab", "sample", "--field", "qp:5", "--diag", "5,1/5", "--count", "5", "--seed", "7"},
        {"stab", "sample", "--field", "qt", "--diag", "t,1/t", "--count", "5", "--non-members"},
        {"fan", "weights", "--lambda", "2,1,0,0"},
        {"fan", "strata", "--lambda", "1,0,0"},
        {"schur", "expand", "--lambda", "3,1", "-n", "3"},
    };
    for (const auto& args : cases) {
        auto a = call(args), b = call(args);
        CHECK(a.code == 0);
        CHECK(a.text == b.text);
    }
    // no --seed means seed 0
    auto implicit = call({"stab", "sample", "--field", "qp:5", "--diag", "5,1/5", "--count", "3"});
    auto explicit0 = call({"stab", "sample", "--field", "qp:5", "--diag", "5,1/5", "--count", "3", "--seed", "0"});
    CHECK(implicit.text == explicit0.text);
    CHECK(implicit.json()["matrices"].size() == 3);
}

TEST_CASE("fan output round-trips") {
    for (const char* l : {"1,0,0", "2,1,0", "1,1,0", "3,2,1", "2,1,0,0"}) {
        auto r = call({"fan", "weights", "--lambda", l});
        REQUIRE(r.code == 0);
        Fan f = fan_from_json(r.json());
        Partition lambda = Partition::parse(l);
        CHECK(fan_equal(f, fan_F_rho(lambda, lambda.length()).fan));
        CHECK(fan_to_json(f) == r.json()["fan"]);

        auto s = call({"fan", "schur", "--lambda", l});
        REQUIRE(s.code == 0);
        CHECK(fan_equal(fan_from_json(s.json()), f));
    }
}

TEST_CASE("input documents fill unset flags") {
    const std::string path = "test_cli_input.json";
    {
        std::ofstream f(path);
        f << R"({"lambda": "2,1,0", "n": 3, "field": "qt"})";
    }
    auto r = call({"fan", "compare", "--in", path});
    CHECK(r.code == 0);
    CHECK(r.json()["maximal_cones"] == 6);
    // an explicit flag overrides the document
    CHECK(call({"fan", "compare", "--in", path, "--lambda", "1,0,0"}).json()["maximal_cones"] == 3);
    {
        std::ofstream f(path);
        f << R"({"points": [["0","0"],["0","3"]], "point": ["0","1"]})";
    }
    auto m = call({"tconv", "member", "--in", path});
    CHECK(m.code == 0);
    CHECK(m.json()["max_hull"] == true);
    CHECK(m.json()["type"] == Json::parse("[[2],[1]]"));
    {
        std::ofstream f(path);
        f << R"({"lambda": "1,0", "colour": "red"})";
    }
    CHECK(call({"schur", "expand", "--in", path}).code == 2);
    CHECK(call({"schur", "expand", "--in", "does_not_exist.json"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("tropical convexity verbs") {
    const std::string pts = R"([["0","0"],["0","3"]])";
    auto t = call({"tconv", "type", "--points", pts, "--point", "0,1"});
    CHECK(t.json()["type"] == Json::parse("[[2],[1]]"));
    auto c = call({"tconv", "cell", "--points", pts, "--type", "[[2],[1]]"});
    CHECK(c.json()["bounded"] == true);
    CHECK(c.json()["dimension"] == 1);
    auto e = call({"tconv", "cell", "--points", pts, "--type", "[[1],[2]]"});
    CHECK(e.json()["empty"] == true);
    CHECK(e.json()["dimension"].is_null());
    auto out = call({"tconv", "member", "--points", pts, "--point", "0,4"});
    CHECK(out.json()["max_hull"] == false);
    CHECK(call({"tconv", "type", "--points", pts, "--point", "0,1,2"}).code == 2);
}

TEST_CASE("trop apply") {
    auto r = call({"trop", "apply", "--field", "qp:5", "--matrix", R"([["1","0"],["-1","1"]])", "--point", "1,0"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"] == Json::parse(R"(["1","1"])"));
    CHECK(r.json()["tropical_matrix"] == Json::parse(R"([["0","-inf"],["0","0"]])"));
}

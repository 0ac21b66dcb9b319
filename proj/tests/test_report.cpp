#include "doctest.h"
#include "permlab/acceptance.hpp"
#include "permlab/report.hpp"

using namespace permlab;

namespace {

Json pass_result(const Report& r, const std::string& name) {
    for (const auto& p : r.json["passes"])
        if (p["pass"] == name) return p["result"];
    FAIL("missing pass " << name);
    return {};
}

}  // namespace

TEST_CASE("analyze: regular C5") {
    AnalysisRequest req;
    req.generators = {"(1 2 3 4 5)"};
    req.degree = 5;
    req.passes = {"primitivity", "suborbits"};
    auto r = analyze(req);
    CHECK(r.json["schema"] == schema_version);
    CHECK(r.json["version"] == tool_version);
    CHECK(r.json["caps"]["elements"] == default_cap());
    CHECK(r.json["passes"][0]["pass"] == "primitivity");
    CHECK(r.json["passes"][1]["pass"] == "suborbits");
    CHECK(pass_result(r, "primitivity")["primitive"] == true);
    CHECK(pass_result(r, "suborbits")["subdegrees"] == Json::array({1, 1, 1, 1, 1}));
    // byte-deterministic
    CHECK(render(analyze(req), Format::Json) == render(r, Format::Json));
}

TEST_CASE("analyze: PG(2,2) Jordan sets and spans") {
    AnalysisRequest req;
    req.fixture = "pg_2_2";
    req.passes = {"jordan", "span"};
    auto r = analyze(req);
    CHECK(pass_result(r, "jordan")["count"] == 15);
    REQUIRE(r.dot.size() == 1);
    auto dot = render(r, Format::Dot);
    CHECK(dot.rfind("digraph jordan", 0) == 0);
    CHECK(dot.find("// passes:") != std::string::npos);
    auto table = pass_result(r, "span")["span_of_pairs"];
    CHECK(table.size() == 21);
    for (const auto& row : table) CHECK(row["span"].size() == 3);
    CHECK(pass_result(r, "span")["audit"]["passes"] == true);
}

TEST_CASE("analyze: every pass runs on a small imprimitive group") {
    AnalysisRequest req;
    req.fixture = "d_4";
    for (const auto& p : analysis_passes()) req.passes.push_back(p.name);
    auto r = analyze(req);
    CHECK(r.json["passes"].size() == analysis_passes().size());
    CHECK(pass_result(r, "primitivity")["primitive"] == false);
    CHECK(pass_result(r, "primitivity")["block_system"] == Json::parse("[[1,3],[2,4]]"));
    CHECK(pass_result(r, "embedding")["compatible"] == true);
    CHECK(pass_result(r, "order")["order"] == 8);
    CHECK(pass_result(r, "lw")["orbit_counts"] == Json::array({1, 1, 2}));
    CHECK_FALSE(render(r, Format::Text).empty());
}

TEST_CASE("analyze: validation") {
    AnalysisRequest one;
    one.generators = {"()"};
    one.degree = 1;
    one.passes = {"primitivity"};
    CHECK_THROWS_AS(analyze(one), Error);
    try {
        analyze(one);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooSmall);
        CHECK(std::string(e.what()).find("degree 1 excluded") != std::string::npos);
    }
    AnalysisRequest bad;
    bad.fixture = "c_5";
    bad.passes = {"primitivity", "nonsense"};
    CHECK_THROWS_AS(analyze(bad), Error);
    bad.passes.clear();
    CHECK_THROWS_AS(analyze(bad), Error);
    AnalysisRequest unknown;
    unknown.fixture = "nope";
    unknown.passes = {"order"};
    CHECK_THROWS_AS(analyze(unknown), Error);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("fixture reports") {
    CHECK(corpus().size() >= 20);
    auto pg = fixture_details(fixture("pg_2_2"));
    CHECK(pg["degree"] == 7);
    CHECK(pg["order"] == 168);
    CHECK(pg["geometry"]["lines"].size() == 7);
    CHECK(pg["geometry"]["proper_subspaces"].size() == 1 + 7 + 7);
    CHECK(fixture_summary(fixture("c_5"))["family"] == "cyclic");
}

TEST_CASE("text rendering") {
    Report r;
    r.json = {{"a", 1}, {"b", Json::array({1, 2})}, {"c", {{"d", "x"}}}};
    CHECK(render(r, Format::Text) == "a: 1\nb: [1,2]\nc:\n  d: x\n");
}

TEST_CASE("acceptance verdicts do not depend on the seed") {
    for (const char* filter : {"Cantor", "involutions", "separation"}) {
        auto a = run_acceptance(1, filter), b = run_acceptance(7, filter);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].pass == b[i].pass);
    }
    CHECK(run_acceptance(1, "no such criterion").empty());
}

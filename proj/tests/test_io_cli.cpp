#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "cgr/io.hpp"
#include "fixtures.hpp"

using namespace cgr;

namespace {

std::string tmp_path(const std::string& name) { return "/tmp/cgr_test_" + name; }

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CGREFINE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("embedding json round trips bit exactly") {
    for (const auto& e : {moment_curve_embedding(6), moment_curve_d4(),
                          random_rectilinear(GraphSpec::k33(), 3, 100),
                          fixtures::d4_two_one()}) {
        const auto j1 = embedding_to_json(e);
        const auto back = embedding_from_json(j1);
        const auto j2 = embedding_to_json(back);
        CHECK(j1.dump() == j2.dump());
        CHECK(back.vertex_pos == e.vertex_pos);
        CHECK(back.edge_path == e.edge_path);
    }
}

TEST_CASE("embedding json accepts integers and rejects junk") {
    Json j;
    j["graph"] = "K3";
    j["vertices"] = {{"1", {0, 0, 0}}, {"2", {1, "2/3", 0}}, {"3", {0, 1, "5"}}};
    const auto e = embedding_from_json(j);
    CHECK(e.pos(2).y == Rat(2, 3));

    Json bad = j;
    bad["vertices"]["2"][1] = "1/0";
    CHECK_THROWS_AS(embedding_from_json(bad), io_error);
    Json missing = j;
    missing["vertices"].erase("3");
    CHECK_THROWS_AS(embedding_from_json(missing), io_error);
    Json unknown = j;
    unknown["graph"] = "Q5";
    CHECK_THROWS_AS(embedding_from_json(unknown), argument_error);
}

TEST_CASE("csv export lists every table row") {
    const auto r = invariant_report(moment_curve_embedding(6), 0);
    const auto csv = invariant_report_csv(r);
    size_t rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == 1 + 45 + 72 + 60 + 10);
    CHECK(csv.find("a2,[123456],0") != std::string::npos);
}

TEST_CASE("cli gen, verify, census and exit codes") {
    const auto f6 = tmp_path("k6.json");
    CHECK(run_cli("gen --graph K6 --source moment --out " + f6) == 0);
    // Determinism: regenerating is byte-identical.
    const auto f6b = tmp_path("k6b.json");
    CHECK(run_cli("gen --graph K6 --source random --seed 42 --out " + tmp_path("r1.json")) == 0);
    CHECK(run_cli("gen --graph K6 --source random --seed 42 --out " + tmp_path("r2.json")) == 0);
    CHECK(read_file(tmp_path("r1.json")) == read_file(tmp_path("r2.json")));
    (void)f6b;

    CHECK(run_cli("verify " + f6) == 0);
    CHECK(run_cli("census " + f6) == 0);

    // Moment file content spot check.
    const auto j = Json::parse(read_file(f6));
    CHECK(j["vertices"]["3"] == Json::array({"3", "9", "27"}));

    // Usage errors.
    CHECK(run_cli("gen --graph K9 --source moment") == 2);
    CHECK(run_cli("gen --graph K6 --source nope") == 2);
    CHECK(run_cli("batch --graph K6 --trials 0") == 2);

    // Census on a polyline embedding is a usage error.
    const auto fpoly = tmp_path("poly.json");
    write_file(fpoly, embedding_to_json(fixtures::polyline_k6_fixtures().front()).dump(2));
    CHECK(run_cli("census " + fpoly) == 2);
    // But verify accepts it.
    CHECK(run_cli("verify " + fpoly) == 0);

    // Corrupted file.
    write_file(tmp_path("junk.json"), "{not json");
    CHECK(run_cli("verify " + tmp_path("junk.json")) == 1);
    // Non-embedding (coincident vertices).
    Json bad = Json::parse(read_file(f6));
    bad["vertices"]["2"] = bad["vertices"]["1"];
    write_file(tmp_path("bad.json"), bad.dump());
    CHECK(run_cli("verify " + tmp_path("bad.json")) == 1);

    // K5 / K33 / D4 verify run the homology checks.
    CHECK(run_cli("gen --graph K5 --source random --seed 3 --span 40 --out " + tmp_path("k5.json")) == 0);
    CHECK(run_cli("verify " + tmp_path("k5.json")) == 0);
    CHECK(run_cli("gen --graph D4 --source random --seed 3 --span 40 --out " + tmp_path("d4.json")) == 0);
    CHECK(run_cli("verify " + tmp_path("d4.json")) == 0);

    // Small batch.
    CHECK(run_cli("batch --graph K6 --trials 4 --seed 11 --span 300") == 0);
}

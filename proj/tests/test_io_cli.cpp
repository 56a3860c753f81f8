#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "pickbody/io.hpp"
#include "pickbody/slice.hpp"

using namespace pickbody;

namespace {

const std::string kFixtures = PICKBODY_FIXTURES;
const std::string kCli = PICKBODY_CLI_PATH;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string out_path = "/tmp/pickbody_cli_" + std::to_string(getpid()) + "_" +
                                 std::to_string(counter++) + ".out";
    const std::string cmd = kCli + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream os;
    os << in.rdbuf();
    r.output = os.str();
    std::remove(out_path.c_str());
    return r;
}

}  // namespace

TEST_CASE("complex serialization round trip") {
    const Cplx z{0.25, -1.5};
    CHECK(cplx_from_json(to_json(z), "z") == z);
    CHECK(to_json(z).dump() == "[0.25,-1.5]");
    CHECK_THROWS_AS(cplx_from_json(Json::array({1.0}), "z"), std::invalid_argument);
    CHECK_THROWS_AS(cplx_from_json(Json{{"re", 1.0}}, "z"), std::invalid_argument);

    const CTuple v{{0, 0}, {0.5, 0.25}};
    const CTuple back = ctuple_from_json(to_json(v), "v");
    REQUIRE(back.size() == v.size());
    CHECK(back[1] == v[1]);
}

TEST_CASE("problem parsing: disc") {
    const Json j = Json::parse(R"({
        "domain": "disc",
        "nodes": [[0.0,0.0],[0.5,0.0]],
        "targets": [[0.0,0.0],[0.2,0.0]],
        "pair": [1, 2]
    })");
    const ProblemFile p = parse_problem(j);
    CHECK(p.domain == "disc");
    CHECK(p.nodes.size() == 2);
    REQUIRE(p.targets.has_value());
    REQUIRE(p.pair.has_value());
    CHECK(p.pair->first == 0);    // 1-based in files
    CHECK(p.pair->second == 1);
}

TEST_CASE("problem parsing: polydisc and errors") {
    CHECK_THROWS_WITH_AS(parse_problem(Json::parse(R"({"domain":"ball"})")),
                         doctest::Contains("domain"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_problem(Json::parse(R"({"domain":"disc"})")),
                         doctest::Contains("nodes"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem(Json::parse(
                        R"({"domain":"polydisc","m":4,"points":[]})")),
                    std::invalid_argument);

    const Json ok = Json::parse(R"({
        "domain": "polydisc", "m": 2,
        "points": [[[0.0,0.0],[0.0,0.0]], [[0.5,0.0],[0.5,0.0]], [[0.0,0.5],[0.0,0.5]]],
        "alpha": [[0.0,0.0],[0.0,0.0],[1.0,0.0]]
    })");
    const ProblemFile p = parse_problem(ok);
    CHECK(p.m == 2);
    CHECK(p.poly_points.size() == 3);
}

TEST_CASE("report round trip") {
    Report r;
    r.command = "mu";
    r.results = {{"mu", 2.0}, {"t", 0.5}};
    r.diagnostics = {{"tol", 1e-12}, {"method", "bisection"}};
    r.exit_status = 0;
    CHECK(Report::from_json(r.to_json()) == r);
}

TEST_CASE("interpolant trace structure") {
    const auto f = ComposedInterpolant::node(
        {0.2, 0}, {0.5, 0}, ComposedInterpolant::constant({0.4, 0}));
    const Json t = interpolant_trace(f);
    CHECK(t.contains("node"));
    CHECK(t["inner"].contains("constant"));
    CHECK(t["inner"]["constant"][0].get<double>() == doctest::Approx(0.4));
}

TEST_CASE("slice gauge and validation") {
    const NodeSet z(CTuple{{0, 0}, {0.5, 0}});
    CHECK(gauge(z, {{0, 0}, {0, 0}}) == doctest::Approx(0.0));
    CHECK(gauge(z, {{0, 0}, {0.5, 0}}) == doctest::Approx(1.0).epsilon(1e-9));

    SliceSpec bad;
    bad.base = {{0, 0}, {0, 0}};
    bad.dir1 = {{0, 0}, {0, 0}};
    bad.dir2 = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(run_slice(z, bad), std::invalid_argument);
}

TEST_CASE("slice CSV format") {
    const NodeSet z(CTuple{{0, 0}, {0.5, 0}});
    SliceSpec spec;
    spec.base = {{0, 0}, {0, 0}};
    spec.dir1 = {{1, 0}, {0, 0}};
    spec.dir2 = {{0, 0}, {1, 0}};
    spec.grid = 3;
    spec.xmin = spec.ymin = -0.5;
    spec.xmax = spec.ymax = 0.5;
    const auto rows = run_slice(z, spec);
    CHECK(rows.size() == 9);
    const std::string csv = slice_csv(rows);
    CHECK(csv.rfind("x,y,mu\n", 0) == 0);
    // the middle row is the origin: mu = 0
    CHECK(rows[4].mu == doctest::Approx(0.0));
}

TEST_CASE("cli diagnose exit codes") {
    CHECK(run_cli("diagnose --input " + kFixtures + "/identity2.json").exit_code == 0);
    CHECK(run_cli("diagnose --input " + kFixtures + "/unsolvable2.json").exit_code == 3);
    const auto bad = run_cli("diagnose --input " + kFixtures + "/malformed.json");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("input error") != std::string::npos);
    CHECK(run_cli("diagnose --input " + kFixtures + "/no_such_file.json").exit_code == 2);
}

TEST_CASE("cli mu report values") {
    const auto r = run_cli("mu --input " + kFixtures + "/mu_ray2.json");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j["results"]["mu"].get<double>() == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(j["results"]["t"].get<double>() == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(j["diagnostics"].contains("method"));
}

TEST_CASE("cli d report values") {
    const auto r = run_cli("d --input " + kFixtures + "/d_three.json");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j["results"]["d"].get<double>() == doctest::Approx(0.34300).epsilon(1e-4));
}

TEST_CASE("cli solve emits a trace with zero residuals") {
    const auto r = run_cli("solve --input " + kFixtures + "/solve2.json");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j["results"]["classification"] == "interior_central");
    CHECK(j["results"]["degree_bound"].get<int>() == 1);
    for (const auto& res : j["results"]["residuals"]) CHECK(res.get<double>() < 1e-9);
    CHECK(run_cli("solve --input " + kFixtures + "/unsolvable2.json").exit_code == 3);
}

TEST_CASE("cli delta certifies the diagonal example") {
    const auto r = run_cli("delta --input " + kFixtures + "/delta_diag.json");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j["results"]["certified"].get<bool>());
    CHECK(j["results"]["upper"].get<double>() == doctest::Approx(0.34300).epsilon(1e-4));
}

TEST_CASE("cli slice produces a CSV grid") {
    const auto r = run_cli("slice --input " + kFixtures + "/slice2.json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("x,y,mu\n", 0) == 0);
    int lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    CHECK(lines >= 1 + 16 * 16);
}

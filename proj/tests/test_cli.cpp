#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smocked/cli.hpp"
#include "smocked/closed_form.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace smocked;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("dist prints the pseudometric") {
    const RunResult r = run_cli({"dist", "--x1", "0.6", "--y1", "0", "--x2", "2.4", "--y2", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.8\n");
}

TEST_CASE("stitch-dist matches the closed form") {
    const RunResult r = run_cli({"stitch-dist", "--j", "3", "0", "--k", "6", "3"});
    REQUIRE(r.code == 0);
    const double got = std::stod(r.out);
    const double formula = closed_form_stitch_distance({3, 0, Orientation::Horizontal},
                                                       {6, 3, Orientation::Horizontal});
    CHECK(std::abs(got - formula) <= 1e-9);
}

TEST_CASE("geodesic lists hops") {
    const RunResult r = run_cli({"geodesic", "--x1", "0", "--y1", "0", "--x2", "6", "--y2", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("distance 4.82842712475") == 0);
    CHECK(r.out.find("hops 3") != std::string::npos);
    CHECK(r.out.find("NE") != std::string::npos);
    CHECK(r.out.find("Right") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"dist", "--x1", "zero", "--y1", "0", "--x2", "1", "--y2", "0"}).code == 2);
    CHECK(run_cli({"dist", "--x1", "0"}).code == 2);
    CHECK(run_cli({"verify", "--suite", "bogus"}).code == 2);
    CHECK(run_cli({"dist", "--x1", "0", "--y1", "0", "--x2", "1", "--y2", "0", "--pattern",
                   "/nonexistent.pat"})
              .code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("help exits cleanly") {
    const RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dist") != std::string::npos);
}

TEST_CASE("verify runs suites and writes CSV") {
    const std::string csv_path = "cli_verify_test.csv";
    const RunResult r = run_cli({"verify", "--suite", "formula", "--suite", "norm", "--window",
                                 "5", "--samples", "500", "--seed", "0", "--csv", csv_path});
    CHECK(r.code == 0);
    CHECK(r.out.find("formula: pass") != std::string::npos);
    CHECK(r.out.find("norm: pass") != std::string::npos);

    const std::string csv = slurp(csv_path);
    CHECK(csv.find("suite,samples,max_abs_error,threshold,pass,witness_x1,witness_y1,witness_x2,"
                   "witness_y2\n") == 0);
    CHECK(count_occurrences(csv, "\n") == 3);  // header + two suites

    // Same invocation, byte-identical output and file.
    const RunResult again = run_cli({"verify", "--suite", "formula", "--suite", "norm", "--window",
                                     "5", "--samples", "500", "--seed", "0", "--csv", csv_path});
    CHECK(again.out == r.out);
    CHECK(slurp(csv_path) == csv);
    std::remove(csv_path.c_str());
}

TEST_CASE("verify all suites at window 15") {
    const RunResult r = run_cli({"verify", "--suite", "all", "--window", "15"});
    CHECK(r.code == 0);
    for (const char* suite : {"formula", "awesome", "norm", "lemmas", "monotone", "deviation"})
        CHECK(r.out.find(std::string(suite) + ":") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("converge writes the curve") {
    const std::string csv_path = "cli_converge_test.csv";
    const RunResult r = run_cli({"converge", "--scales", "1,2,4", "--ball", "2", "--samples",
                                 "200", "--seed", "0", "--csv", csv_path});
    CHECK(r.code == 0);
    const std::string csv = slurp(csv_path);
    CHECK(csv.find("R,sup_deviation,bound_K_over_R,samples,seed\n") == 0);
    CHECK(count_occurrences(csv, "\n") == 4);
    const RunResult again = run_cli({"converge", "--scales", "1,2,4", "--ball", "2", "--samples",
                                     "200", "--seed", "0", "--csv", csv_path});
    CHECK(slurp(csv_path) == csv);
    CHECK(again.out == r.out);
    std::remove(csv_path.c_str());
}

TEST_CASE("queries against a pattern file") {
    const std::string pat_path = "cli_pattern_test.pat";
    {
        std::ofstream f(pat_path);
        f << "# a small cross\nH 0 0\nH 3 0\nV 1.5 1.5\n";
    }
    const RunResult d = run_cli({"dist", "--x1", "-10", "--y1", "0", "--x2", "-9", "--y2", "0",
                                 "--pattern", pat_path});
    CHECK(d.code == 0);
    CHECK(d.out == "1\n");  // complete patterns take any query

    const RunResult s =
        run_cli({"stitch-dist", "--j", "0", "0", "--k", "3", "0", "--pattern", pat_path});
    CHECK(s.code == 0);
    CHECK(s.out == "2\n");
    std::remove(pat_path.c_str());
}

TEST_CASE("sphere trace output") {
    const RunResult r = run_cli({"sphere", "--points", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("points 8") == 0);
    CHECK(r.out.find("1.5,0\n") != std::string::npos);
}

TEST_CASE("render emits one line element per stitch") {
    const std::string svg_path = "cli_render_test.svg";
    const RunResult r = run_cli({"render", "--out", svg_path, "--radius", "4"});
    CHECK(r.code == 0);
    const std::string svg = slurp(svg_path);
    CHECK(count_occurrences(svg, "<line ") == 13);
    CHECK(svg.find("<svg") == 0);

    const RunResult g = run_cli({"render", "--out", svg_path, "--radius", "4", "--geodesic", "0",
                                 "0", "6", "3"});
    CHECK(g.code == 0);
    const std::string svg2 = slurp(svg_path);
    CHECK(count_occurrences(svg2, "<polyline ") == 3);
    std::remove(svg_path.c_str());
}

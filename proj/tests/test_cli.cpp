#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "congestsim/commands.hpp"
#include "congestsim/report.hpp"

using namespace congest;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("csv: quoting round trip") {
    std::vector<std::vector<std::string>> rows = {
        {"plain", "a,b", "with \"quotes\"", ""},
        {"second", "line\nbreak", "3", "4"},
    };
    std::string text;
    for (const auto& r : rows) text += csv_row(r);
    CHECK(csv_parse(text) == rows);
}

TEST_CASE("scenario parsing") {
    Scenario s = parse_scenario(
        "# demo\n[scenario]\nmode = passive\ngraph = path(8)\ninput = path(8)\n"
        "algorithm = size-upper-bound\nbandwidth = 9\nseed = 7\nmax_rounds = 50\n");
    CHECK(s.mode == ExecutionMode::SupportedPassive);
    CHECK(s.graph == "path(8)");
    CHECK(s.algorithm == "size-upper-bound");
    CHECK(s.bandwidth == 9);
    CHECK(s.seed == 7);
    CHECK(s.max_rounds == 50);

    CHECK_THROWS_AS(parse_scenario("[scenario]\nbogus = 1\n"), FormatError);
    CHECK_THROWS_AS(parse_scenario("mode = plain\n"), FormatError);  // missing section
    CHECK_THROWS_AS(parse_scenario("[scenario]\ngraph = path(4)\n"), ConfigError);  // no algorithm
    CHECK_THROWS_AS(parse_scenario("[scenario]\nmode = sideways\ngraph = path(4)\n"
                                   "algorithm = apsp\n"),
                    ConfigError);
}

TEST_CASE("mode names") {
    CHECK(parse_mode("plain") == ExecutionMode::PlainCongest);
    CHECK(parse_mode("active") == ExecutionMode::SupportedActive);
    CHECK(parse_mode("passive") == ExecutionMode::SupportedPassive);
    CHECK_THROWS_AS(parse_mode("bogus"), ConfigError);
}

TEST_CASE("simulate: separation rows for both modes") {
    Scenario sup;
    sup.mode = ExecutionMode::SupportedActive;
    sup.graph = "path(64)";
    sup.algorithm = "size-upper-bound";
    std::ostringstream sup_out;
    CHECK(cmd_simulate(sup, sup_out) == 0);
    auto sup_rows = csv_parse(sup_out.str());
    REQUIRE(sup_rows.size() == 2);
    CHECK(sup_rows[0][3] == "rounds");
    CHECK(sup_rows[1][3] == "0");

    Scenario plain = sup;
    plain.mode = ExecutionMode::PlainCongest;
    std::ostringstream plain_out;
    CHECK(cmd_simulate(plain, plain_out) == 0);
    auto plain_rows = csv_parse(plain_out.str());
    CHECK(std::stoi(plain_rows[1][3]) >= 63);
}

TEST_CASE("simulate: a designated cut feeds the cut_bits column") {
    Scenario s;
    s.mode = ExecutionMode::PlainCongest;
    s.graph = "path(8)";
    s.algorithm = "identifier-sets";
    s.cut = "3-4";
    std::ostringstream out;
    CHECK(cmd_simulate(s, out) == 0);
    auto rows = csv_parse(out.str());
    CHECK(std::stoll(rows[1][5]) > 0);  // cut_bits

    Scenario bad = s;
    bad.cut = "3:4";
    std::ostringstream bad_out;
    CHECK_THROWS_AS(cmd_simulate(bad, bad_out), ConfigError);
}

TEST_CASE("simulate: configuration errors surface as ConfigError") {
    Scenario s;
    s.graph = "path(8)";
    s.algorithm = "apsp";
    s.bandwidth = 1;
    std::ostringstream out;
    CHECK_THROWS_AS(cmd_simulate(s, out), ConfigError);

    Scenario bad_root;
    bad_root.graph = "path(4)";
    bad_root.algorithm = "bfs(9)";
    CHECK_THROWS_AS(cmd_simulate(bad_root, out), ConfigError);

    Scenario bad_gen;
    bad_gen.graph = "hypercube(4)";
    bad_gen.algorithm = "apsp";
    CHECK_THROWS_AS(cmd_simulate(bad_gen, out), ConfigError);
}

TEST_CASE("simulate: byte-identical reports and traces for equal seeds") {
    Scenario s;
    s.mode = ExecutionMode::PlainCongest;
    s.graph = "random_connected(12,0.3,5)";
    s.algorithm = "identifier-sets";
    s.seed = 33;

    const std::string trace_a = "/tmp/congestsim_trace_a.txt";
    const std::string trace_b = "/tmp/congestsim_trace_b.txt";
    std::ostringstream out_a, out_b;
    CHECK(cmd_simulate(s, out_a, trace_a) == 0);
    CHECK(cmd_simulate(s, out_b, trace_b) == 0);
    CHECK(out_a.str() == out_b.str());
    CHECK(slurp(trace_a) == slurp(trace_b));
    CHECK(!slurp(trace_a).empty());
    std::remove(trace_a.c_str());
    std::remove(trace_b.c_str());
}

TEST_CASE("reduce: exhaustive toy sweep agrees and respects bounds") {
    ReduceOptions opts;
    opts.k_min = 2;
    opts.k_max = 3;
    std::ostringstream out;
    CHECK(cmd_reduce(opts, out) == 0);
    auto rows = csv_parse(out.str());
    REQUIRE(rows.size() == 1 + 16 + 64);
    CHECK(rows[0] == std::vector<std::string>{"x0", "x1", "answer", "f", "T", "payload_bits",
                                              "bound_2bST", "ok"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][2] == rows[i][3]);  // answer == f
        CHECK(rows[i][7] == "1");
    }
}

TEST_CASE("reduce: zero samples yield a header-only report") {
    ReduceOptions opts;
    opts.exhaustive = false;
    opts.samples = 0;
    std::ostringstream out;
    CHECK(cmd_reduce(opts, out) == 0);
    auto rows = csv_parse(out.str());
    CHECK(rows.size() == 1);
}

TEST_CASE("separate: all three problems emit plausible tables") {
    SeparateOptions size_opts;
    size_opts.problem = "size-upper-bound";
    size_opts.sizes = {8, 16};
    std::ostringstream size_out;
    CHECK(cmd_separate(size_opts, size_out) == 0);
    auto rows = csv_parse(size_out.str());
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][2] == "0");                 // supported rounds
    CHECK(std::stoi(rows[1][3]) >= 7);        // plain rounds >= diameter

    SeparateOptions color_opts;
    color_opts.problem = "coloring";
    color_opts.sizes = {12, 24};
    std::ostringstream color_out;
    CHECK(cmd_separate(color_opts, color_out) == 0);
    for (const auto& row : csv_parse(color_out.str()))
        if (row[0] != "n") CHECK(row[3] == "1");  // proper

    SeparateOptions id_opts;
    id_opts.problem = "identifier-sets";
    id_opts.sizes = {8, 16};
    std::ostringstream id_out;
    CHECK(cmd_separate(id_opts, id_out) == 0);
    for (const auto& row : csv_parse(id_out.str()))
        if (row[0] != "n") CHECK(row[4] == "1");  // invariants

    SeparateOptions bad;
    bad.problem = "unknown";
    bad.sizes = {8};
    std::ostringstream bad_out;
    CHECK_THROWS_AS(cmd_separate(bad, bad_out), ConfigError);
}

TEST_CASE("registry: exact seven rows, reparsed losslessly") {
    std::ostringstream out;
    CHECK(cmd_registry(out) == 0);
    auto rows = csv_parse(out.str());
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == std::vector<std::string>{"problem", "bound", "approximation", "source"});

    bool has_det_only = false;
    for (const auto& row : rows)
        if (row[1] == "Ω(n^2)" && row[2] == "det. only") has_det_only = true;
    CHECK(has_det_only);

    // Snapshot of the full table.
    CHECK(rows[1][0] == "4-cycle, 2k-cycle, Girth");
    CHECK(rows[1][1] == "Ω(n^{1/2}/log n)");
    CHECK(rows[2][1] == "Ω(n/log n)");
    CHECK(rows[3][1] == "Ω(n/(log n)^2)");
    CHECK(rows[4][1] == "Ω(n/(log n)^3)");
    CHECK(rows[5][1] == "Ω(n^{2-1/k}/(k log n))");
    CHECK(rows[6][1] == "Ω(n^2/(log n)^2)");
    CHECK(rows[7][1] == "Ω(n^2)");

    // Determinism of the emission itself.
    std::ostringstream again;
    cmd_registry(again);
    CHECK(again.str() == out.str());
}

TEST_CASE("check-family: exit codes reflect violations") {
    CheckFamilyOptions toy;
    toy.family = "toy";
    toy.n = 8;
    std::ostringstream toy_out;
    CHECK(cmd_check_family(toy, toy_out) == 0);
    CHECK(csv_parse(toy_out.str()).size() == 1);  // header only

    CheckFamilyOptions leak;
    leak.family = "mutant-side-leak";
    leak.n = 8;
    std::ostringstream leak_out;
    CHECK(cmd_check_family(leak, leak_out) == 1);
    auto rows = csv_parse(leak_out.str());
    CHECK(rows.size() > 1);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][0] == "side-independence");

    CheckFamilyOptions unknown;
    unknown.family = "missing";
    unknown.n = 8;
    std::ostringstream u_out;
    CHECK_THROWS_AS(cmd_check_family(unknown, u_out), ConfigError);
}

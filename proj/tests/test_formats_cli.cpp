#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "sepdim/family_io.hpp"
#include "sepdim/graph_io.hpp"
#include "test_util.hpp"

using namespace sepdim;
using namespace sepdim::testutil;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "sepdim_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    fs::path out = work_dir() / "stdout.txt";
    std::string cmd = std::string(SEPDIM_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int ret = std::system(cmd.c_str());
    return RunResult{ret >> 8, slurp(out)};
}

}  // namespace

TEST_CASE("family file round trip and validation") {
    PermutationFamily fam{4, {Permutation({0, 1, 2, 3}), Permutation({1, 2, 3, 0})}};
    std::ostringstream out;
    write_family(fam, out);
    std::istringstream in(out.str());
    PermutationFamily back = read_family(in);
    CHECK(back.n == 4);
    REQUIRE(back.members.size() == 2);
    CHECK(back.members[0] == fam.members[0]);
    CHECK(back.members[1] == fam.members[1]);

    auto parse = [](const std::string& text) {
        std::istringstream s(text);
        return read_family(s);
    };
    CHECK_THROWS_AS(parse("not json"), parse_error);
    CHECK_THROWS_AS(parse("{\"n\": 3}"), parse_error);
    CHECK_THROWS_AS(parse("{\"n\": 3, \"permutations\": [[0,1]]}"), parse_error);
    CHECK_THROWS_AS(parse("{\"n\": 3, \"permutations\": [[0,1,1]]}"), parse_error);
    CHECK(parse("{\"n\": 0, \"permutations\": []}").members.empty());
}

TEST_CASE("cli gen") {
    fs::path a = work_dir() / "a.el";
    fs::path b = work_dir() / "b.el";
    RunResult r1 = run_cli("gen -n 10 -d 3 --seed 7 -o " + a.string());
    CHECK(r1.exit_code == 0);
    Graph g = read_graph_file(a.string());
    CHECK(g.edge_count() == 15);
    CHECK(g.regular_degree() == 3);

    RunResult r2 = run_cli("gen -n 10 -d 3 --seed 7 -o " + b.string());
    CHECK(r2.exit_code == 0);
    CHECK(slurp(a) == slurp(b));  // byte-identical for the same seed

    CHECK(run_cli("gen -n 5 -d 3 --seed 1 -o " + (work_dir() / "x.el").string()).exit_code == 1);
    CHECK(run_cli("gen -n 10 -d 3 -o missing_seed.el").exit_code == 1);
}

TEST_CASE("cli solve and verify") {
    fs::path k4 = work_dir() / "k4.el";
    write_graph_file(complete_graph(4), k4.string());
    fs::path fam = work_dir() / "k4_fam.json";

    RunResult solve = run_cli("solve " + k4.string() + " --family-out " + fam.string());
    CHECK(solve.exit_code == 0);
    CHECK(solve.out.find("sdim = 3") != std::string::npos);

    RunResult verify = run_cli("verify " + k4.string() + " " + fam.string());
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("SUITABLE") == 0);

    RunResult limited = run_cli("solve " + k4.string() + " --limit 2");
    CHECK(limited.exit_code == 3);
    CHECK(limited.out.find("sdim > 2") != std::string::npos);

    // A too-small family is NOT-SUITABLE with a witness, exit 2.
    write_family_file(PermutationFamily{4, {Permutation({0, 1, 2, 3})}},
                      (work_dir() / "small.json").string());
    RunResult bad = run_cli("verify " + k4.string() + " " + (work_dir() / "small.json").string());
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("NOT-SUITABLE e=(") != std::string::npos);

    fs::path c4 = work_dir() / "c4.el";
    write_graph_file(cycle_graph(4), c4.string());
    RunResult sc4 = run_cli("solve " + c4.string());
    CHECK(sc4.exit_code == 0);
    CHECK(sc4.out.find("sdim = 2") != std::string::npos);

    fs::path m = work_dir() / "m.el";
    write_graph_file(matching_graph(3), m.string());
    RunResult sm = run_cli("solve " + m.string());
    CHECK(sm.exit_code == 0);
    CHECK(sm.out.find("sdim = 1") != std::string::npos);
}

TEST_CASE("cli construct then verify is SUITABLE") {
    fs::path g = work_dir() / "g20.el";
    run_cli("gen -n 20 -d 3 --seed 5 -o " + g.string());
    fs::path fam = work_dir() / "g20_fam.json";

    RunResult c = run_cli("construct " + g.string() + " --method dist2 -o " + fam.string());
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("verified: SUITABLE") != std::string::npos);
    CHECK(run_cli("verify " + g.string() + " " + fam.string()).exit_code == 0);

    fs::path fam2 = work_dir() / "g20_fam2.json";
    RunResult r = run_cli("construct " + g.string() +
                          " --method recursive --base-cutoff 2 --c1 6 --c2 1 --seed 9 -o " +
                          fam2.string());
    CHECK(r.exit_code == 0);
    CHECK(run_cli("verify " + g.string() + " " + fam2.string()).exit_code == 0);

    CHECK(run_cli("construct " + g.string() + " --method recursive -o x.json").exit_code == 1);
}

TEST_CASE("cli lower") {
    fs::path g = work_dir() / "g20b.el";
    run_cli("gen -n 20 -d 3 --seed 6 -o " + g.string());
    RunResult r = run_cli("lower " + g.string() + " --delta 0.1 --eps 0.3");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("not established: size hypothesis") != std::string::npos);

    RunResult sampled =
        run_cli("lower " + g.string() + " --delta 0.1 --eps 0.3 --mode sampled --seed 4");
    CHECK(sampled.out.find("mode=sampled") != std::string::npos);
    CHECK(run_cli("lower " + g.string() + " --delta 0.1 --eps 0.3 --mode sampled").exit_code ==
          1);  // seed required
}

TEST_CASE("cli experiment determinism and dominance") {
    fs::path csv1 = work_dir() / "e1.csv";
    fs::path csv2 = work_dir() / "e2.csv";
    std::string args = "experiment --d-list 1,2,3 --n-list 8 --seeds 1,2 "
                       "--methods exact,dist2 --no-timing -o ";
    CHECK(run_cli(args + csv1.string()).exit_code == 0);
    CHECK(run_cli(args + csv2.string()).exit_code == 0);
    std::string body = slurp(csv1);
    CHECK(body == slurp(csv2));

    // Parse rows: exact value never exceeds the dist2 family size per graph.
    std::istringstream lines(body);
    std::string line;
    std::getline(lines, line);
    CHECK(line.find("n,d,seed,method,family_size,exact_value,verified") == 0);
    std::map<std::string, long> exact_size, dist2_size;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) f.push_back(tok);
        REQUIRE(f.size() == 7);
        CHECK(f[6] == "true");
        std::string key = f[0] + "/" + f[1] + "/" + f[2];
        if (f[3] == "exact") exact_size[key] = std::stol(f[4]);
        if (f[3] == "dist2") dist2_size[key] = std::stol(f[4]);
    }
    CHECK(!exact_size.empty());
    for (const auto& [key, val] : exact_size) {
        REQUIRE(dist2_size.count(key) == 1);
        CHECK(val <= dist2_size[key]);
    }

    // Empty method list gives a header-only file.
    fs::path csv3 = work_dir() / "e3.csv";
    CHECK(run_cli("experiment --d-list 2 --n-list 6 --seeds 1 --no-timing -o " +
                  csv3.string()).exit_code == 0);
    std::string header_only = slurp(csv3);
    CHECK(header_only == "n,d,seed,method,family_size,exact_value,verified\r\n");
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("solve no_such_file.el").exit_code == 1);
    CHECK(run_cli("frobnicate x").exit_code == 1);
}

TEST_CASE("cli resource caps exit with code 3") {
    fs::path g = work_dir() / "g12.el";
    run_cli("gen -n 12 -d 3 --seed 2 -o " + g.string());
    CHECK(run_cli("solve " + g.string()).exit_code == 3);  // above the vertex cap
}

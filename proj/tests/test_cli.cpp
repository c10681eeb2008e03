#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "commands.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "mcqw");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = mcqw::cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "mcqw_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
    const fs::path path = scratch() / name;
    std::ofstream(path) << body;
    return path.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("analyze: graph 2 equals its stationary distribution") {
    const auto g = write_file("g2.txt", "n 2\n1 1\n1 2\n2 1\n");
    const auto r = run({"analyze", "--input", g, "--T", "2000"});
    CHECK(r.code == 0);
    CHECK(r.out.find("properties: ergodic, reve") != std::string::npos);
    CHECK(r.out.find("pi: (0.666666666667, 0.333333333333)") != std::string::npos);
    CHECK(r.out.find("P_inf (analytic): (0.666666666667, 0.333333333333)") != std::string::npos);
    CHECK(r.out.find("pi vs P_inf: equal") != std::string::npos);
}

TEST_CASE("analyze: graph 3 reports the mismatch") {
    const auto g = write_file("g3.txt", "n 3\n1 2\n1 3\n2 1\n3 2\n");
    const auto r = run({"analyze", "--input", g, "--T", "2000"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi: (0.4, 0.4, 0.2)") != std::string::npos);
    CHECK(r.out.find("P_inf (analytic): (0.333333333333, 0.333333333333, 0.333333333333)") != std::string::npos);
    CHECK(r.out.find("DIFFER") != std::string::npos);
}

TEST_CASE("analyze: JSON matrix input and identity without unique pi") {
    const auto m = write_file("id.json", R"({"n": 2, "rows": [[1, 0], [0, 1]]})");
    const auto r = run({"analyze", "--matrix", m, "--T", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi: non-unique") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"analyze", "--input", write_file("bad.txt", "n 2\n1 x\n")}).code == 2);
    const auto bad = run({"analyze", "--input", write_file("bad.txt", "n 2\n1 x\n")});
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run({"analyze", "--input", write_file("dead.txt", "n 2\n1 2\n")}).code == 3);
    CHECK(run({"analyze"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"analyze", "--input", "/nonexistent/file"}).code == 2);
    CHECK(run({"conjecture-probe", "--trials", "0"}).code == 1);
    CHECK(run({"line", "--init", "1,1,0", "--out", scratch().string()}).code == 3);
    CHECK(run({"line", "--init", "1,0", "--out", scratch().string()}).code == 1);
}

TEST_CASE("line: one step and point mass") {
    const fs::path dir = scratch() / "line1";
    auto r = run({"line", "--init", "1,0,0", "--t", "1", "--out", dir.string()});
    REQUIRE(r.code == 0);
    const auto csv = slurp(dir / "line_distribution.csv");
    CHECK(csv.find("-1,0.111111111111\n0,0.444444444444\n1,0.444444444444\n") != std::string::npos);
    CHECK(fs::exists(dir / "line_cdf.csv"));
    CHECK(fs::exists(dir / "line_density.csv"));
    CHECK(fs::exists(dir / "line_moments.csv"));

    const fs::path dir0 = scratch() / "line0";
    r = run({"line", "--t", "0", "--out", dir0.string()});
    REQUIRE(r.code == 0);
    CHECK(slurp(dir0 / "line_distribution.csv") == "x,probability\n-2,0\n-1,0\n0,1\n1,0\n2,0\n");
}

TEST_CASE("line: complex amplitudes and rounded input") {
    const fs::path dir = scratch() / "linec";
    auto r = run({"line", "--init", "0.6i,0,0.8", "--t", "3", "--out", dir.string()});
    CHECK(r.code == 0);
    r = run({"line", "--init", "0.5774,0.5774,0.5774", "--t", "2000", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.err.find("renormalized") != std::string::npos);
    const auto pos = r.out.find("KS distance: ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(r.out.substr(pos + 13)) <= 0.05);
}

TEST_CASE("conjecture-probe: graphs 4 and 3") {
    auto r = run({"conjecture-probe", "--input", write_file("g4.txt", "n 3\n1 2\n2 1\n2 3\n3 2\n")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("0,3,yes,yes,") != std::string::npos);
    CHECK(r.out.find("candidates (distance > 1.000000e-06): 0") != std::string::npos);
    r = run({"conjecture-probe", "--input", write_file("g3.txt", "n 3\n1 2\n1 3\n2 1\n3 2\n")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("0,3,yes,no,") != std::string::npos);
    CHECK(r.out.find("candidates (distance > 1.000000e-06): 0") != std::string::npos);
}

TEST_CASE("conjecture-probe: same seed gives identical reports") {
    const auto a = run({"conjecture-probe", "--seed", "7", "--trials", "6", "--n", "4"});
    const auto b = run({"conjecture-probe", "--seed", "7", "--trials", "6", "--n", "4"});
    const auto c = run({"conjecture-probe", "--seed", "8", "--trials", "6", "--n", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("quantize, evolve and lemmas") {
    const auto g = write_file("g1.txt", "n 2\n1 1\n2 1\n");
    auto r = run({"quantize", "--input", g});
    CHECK(r.code == 0);
    CHECK(r.out.find("overlap_with_alpha0") != std::string::npos);
    r = run({"evolve", "--input", g, "--t", "0"});
    CHECK(r.out == "vertex,probability\n1,0.5\n2,0.5\n");
    r = run({"lemmas", "--input", write_file("half.txt", "n 2\n1 1\n1 2\n2 1\n2 2\n")});
    CHECK(r.code == 0);
    CHECK(r.out.find("lemma3: passed") != std::string::npos);
}

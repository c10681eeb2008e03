#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace mcqw::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3 };

struct RunConfig {
    std::string command;
    std::optional<std::string> input;   // edge-list graph file
    std::optional<std::string> matrix;  // JSON matrix file
    std::size_t cesaro_steps = 20000;   // --T
    std::optional<std::size_t> t;       // --t
    std::optional<std::size_t> radius;  // --L
    std::string init = "0.57735026918962576,0.57735026918962576,0.57735026918962576";
    std::uint64_t seed = 1;
    std::size_t trials = 20;
    std::size_t n = 4;
    std::optional<std::string> out;
    // Threshold for "equal" in analyze and counterexample flags in conjecture-probe.
    double tol = 1e-6;
};

// Runs one subcommand; reports go to `out` (or files under --out), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and dispatches to run().
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcqw::cli

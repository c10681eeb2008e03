#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mcqw/errors.hpp"
#include "mcqw/io.hpp"
#include "support.hpp"

using namespace mcqw;

namespace {

std::size_t parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        io::parse_graph(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("graph files: header, comments, 1-indexed edges") {
    std::istringstream in("# graph 2\nn 2\n1 1   # loop\n\n1 2\n2 1\n");
    const auto p = io::parse_graph(in);
    CHECK(p.n() == 2);
    CHECK(p(0, 0) == 0.5);
    CHECK(p(1, 0) == 1.0);
}

TEST_CASE("graph files: malformed lines report their line number") {
    CHECK(parse_error_line("n 2\n1 x\n") == 2);
    CHECK(parse_error_line("m 2\n") == 1);
    CHECK(parse_error_line("n 2\n1 1\n\n3 1\n") == 4);
    CHECK(parse_error_line("n 2\n1 1 1\n") == 2);
    CHECK(parse_error_line("n 0\n") == 1);
    std::istringstream empty("");
    CHECK_THROWS_AS(io::parse_graph(empty), ParseError);
}

TEST_CASE("graph files: dead-end vertex is a domain error") {
    std::istringstream in("n 2\n1 2\n");
    try {
        io::parse_graph(in);
        FAIL("expected an error");
    } catch (const ParseError&) {
        FAIL("not a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroOutDegree);
    }
}

TEST_CASE("matrix files") {
    std::istringstream ok(R"({"n": 2, "rows": [[0.5, 0.5], [1, 0]]})");
    const auto p = io::parse_matrix(ok);
    CHECK(p(0, 1) == 0.5);
    std::istringstream bad_json("{\"n\": 2,");
    CHECK_THROWS_AS(io::parse_matrix(bad_json), ParseError);
    std::istringstream short_row(R"({"n": 2, "rows": [[1], [1, 0]]})");
    CHECK_THROWS_AS(io::parse_matrix(short_row), ParseError);
    std::istringstream not_stochastic(R"({"n": 2, "rows": [[0.5, 0.4], [1, 0]]})");
    CHECK_THROWS_AS(io::parse_matrix(not_stochastic), Error);
}

TEST_CASE("distribution csv") {
    std::ostringstream out;
    io::write_distribution_csv(out, {0.75, 0.25});
    CHECK(out.str() == "vertex,probability\n1,0.75\n2,0.25\n");
}

TEST_CASE("spectral report is valid json with one record per eigenvector") {
    const QuantizedWalk w(test::reference_graph(1));
    const auto basis = spectral_basis(w);
    std::ostringstream out;
    io::write_spectral_report(out, basis, uniform_initial_state(w));
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.size() == basis.m());
    double total = 0.0;
    for (const auto& rec : doc) {
        CHECK(rec["eigenvalue"].size() == 2);
        CHECK(rec.contains("group_id"));
        const double re = rec["overlap_with_alpha0"][0];
        const double im = rec["overlap_with_alpha0"][1];
        total += re * re + im * im;
    }
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("line csv outputs") {
    const auto init = line::InitialState::make(1.0, 0.0, 0.0);
    const auto p = line::simulate(init, 1);
    std::ostringstream dist;
    io::write_line_distribution_csv(dist, p);
    CHECK(dist.str().rfind("x,probability\n-3,0\n-2,0\n-1,0.111111111111\n", 0) == 0);

    std::ostringstream cdf;
    io::write_cdf_comparison_csv(cdf, p, line::density_coefficients(init));
    CHECK(cdf.str().rfind("y,F_empirical,F_analytic\n-1,0.111111111111,", 0) == 0);

    std::ostringstream dens;
    io::write_density_csv(dens, line::density_coefficients(init), -1.0, 1.0, 3);
    CHECK(dens.str().rfind("point_mass_at_zero=0.288675134595\ny,f_continuous\n-1,0\n0,", 0) == 0);
}

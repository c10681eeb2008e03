#include "mcqw/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "mcqw/errors.hpp"

namespace mcqw::io {

namespace {

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return in;
}

}  // namespace

TransitionMatrix parse_graph(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream fields(line);
        if (!n) {
            std::string key;
            long long count = 0;
            if (!(fields >> key >> count) || key != "n")
                throw ParseError(lineno, "expected header 'n <count>'");
            if (count <= 0) throw ParseError(lineno, "vertex count must be positive");
            n = static_cast<std::size_t>(count);
        } else {
            long long j = 0;
            long long k = 0;
            if (!(fields >> j >> k)) throw ParseError(lineno, "expected an edge 'j k'");
            if (j < 1 || k < 1 || static_cast<std::size_t>(j) > *n || static_cast<std::size_t>(k) > *n)
                throw ParseError(lineno, "vertex index outside 1.." + std::to_string(*n));
            edges.emplace_back(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1));
        }
        std::string extra;
        if (fields >> extra) throw ParseError(lineno, "unexpected trailing field '" + extra + "'");
    }
    if (!n) throw ParseError(lineno, "missing header 'n <count>'");
    return from_adjacency(edges, *n);
}

TransitionMatrix read_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_graph(in);
}

TransitionMatrix parse_matrix(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError(0, "matrix file needs an integer field \"n\"");
    const auto n_signed = doc["n"].get<long long>();
    if (n_signed <= 0) throw ParseError(0, "\"n\" must be positive");
    const auto n = static_cast<std::size_t>(n_signed);
    if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].size() != n)
        throw ParseError(0, "\"rows\" must be a list of n rows");
    RealMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& row = doc["rows"][j];
        if (!row.is_array() || row.size() != n)
            throw ParseError(0, "row " + std::to_string(j + 1) + " must have n entries");
        for (std::size_t k = 0; k < n; ++k) {
            if (!row[k].is_number())
                throw ParseError(0, "row " + std::to_string(j + 1) + " entry " + std::to_string(k + 1) +
                                        " is not a number");
            m(j, k) = row[k].get<double>();
        }
    }
    return TransitionMatrix(std::move(m));
}

TransitionMatrix read_matrix_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_matrix(in);
}

void write_distribution_csv(std::ostream& out, const RealVector& p) {
    const auto old = out.precision(12);
    out << "vertex,probability\n";
    for (std::size_t j = 0; j < p.size(); ++j) out << j + 1 << ',' << p[j] << '\n';
    out.precision(old);
}

void write_spectral_report(std::ostream& out, const SpectralBasis& basis, const EdgeState& alpha0) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& e : basis.entries) {
        const complex overlap = inner(e.phi, alpha0.amplitudes);
        doc.push_back({{"eigenvalue", {e.mu.real(), e.mu.imag()}},
                       {"group_id", e.group},
                       {"overlap_with_alpha0", {overlap.real(), overlap.imag()}}});
    }
    out << doc.dump(2) << '\n';
}

void write_line_distribution_csv(std::ostream& out, const line::Distribution& p) {
    const auto old = out.precision(12);
    out << "x,probability\n";
    const long r = static_cast<long>(p.radius);
    for (long x = -r; x <= r; ++x) out << x << ',' << p.at(x) << '\n';
    out.precision(old);
}

void write_cdf_comparison_csv(std::ostream& out, const line::Distribution& p, const line::WeakLimitDensity& d) {
    const line::EmpiricalCdf emp(p);
    const auto old = out.precision(12);
    out << "y,F_empirical,F_analytic\n";
    const long t = static_cast<long>(p.t);
    for (long x = -t; x <= t; ++x) {
        const double y = static_cast<double>(x) / static_cast<double>(t);
        out << y << ',' << emp.at_site(x) << ',' << line::cdf(d, y) << '\n';
    }
    out.precision(old);
}

void write_density_csv(std::ostream& out, const line::WeakLimitDensity& d, double lo, double hi,
                       std::size_t points) {
    const auto old = out.precision(12);
    out << "point_mass_at_zero=" << d.c << '\n';
    out << "y,f_continuous\n";
    for (std::size_t i = 0; i < points; ++i) {
        const double y = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        out << y << ',' << line::density(d, y) << '\n';
    }
    out.precision(old);
}

std::string format_vector(const RealVector& v) {
    std::ostringstream s;
    s << std::setprecision(12) << '(';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
    s << ')';
    return s.str();
}

}  // namespace mcqw::io

#pragma once

// Text formats: edge-list and JSON matrix input, CSV and JSON reports.

#include <iosfwd>
#include <string>

#include "mcqw/line.hpp"
#include "mcqw/markov.hpp"
#include "mcqw/szegedy.hpp"

namespace mcqw::io {

// Edge list: a header line `n <count>` followed by one `j k` pair per line,
// 1-indexed. `#` starts a comment. Throws ParseError with the line number.
TransitionMatrix parse_graph(std::istream& in);
TransitionMatrix read_graph_file(const std::string& path);

// {"n": <count>, "rows": [[...], ...]} with n rows of n non-negative reals.
TransitionMatrix parse_matrix(std::istream& in);
TransitionMatrix read_matrix_file(const std::string& path);

// `vertex,probability`, 1-indexed, 12 significant digits.
void write_distribution_csv(std::ostream& out, const RealVector& p);

// JSON list of {eigenvalue: [re, im], group_id, overlap_with_alpha0: [re, im]}.
void write_spectral_report(std::ostream& out, const SpectralBasis& basis, const EdgeState& alpha0);

// `x,probability` for every site of the truncated lattice.
void write_line_distribution_csv(std::ostream& out, const line::Distribution& p);

// `y,F_empirical,F_analytic` at each site y = x/t.
void write_cdf_comparison_csv(std::ostream& out, const line::Distribution& p, const line::WeakLimitDensity& d);

// `point_mass_at_zero=<c>` then `y,f_continuous` on `points` equally spaced y in [lo, hi].
void write_density_csv(std::ostream& out, const line::WeakLimitDensity& d, double lo, double hi,
                       std::size_t points);

// Vector as "(v1, v2, ...)" with 12 significant digits.
std::string format_vector(const RealVector& v);

}  // namespace mcqw::io

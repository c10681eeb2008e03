#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcqw/linalg.hpp"
#include "mcqw/tolerances.hpp"

namespace mcqw {

// Row-stochastic n x n matrix; entry (j, k) is the probability of j -> k.
// Validated on construction and immutable afterwards.
class TransitionMatrix {
public:
    // Throws InvalidInput when the matrix is not square, is empty, has an entry
    // outside [0, 1], or a row whose sum differs from 1 by more than tol.row_sum.
    explicit TransitionMatrix(RealMatrix entries, const Tolerances& tol = {});

    std::size_t n() const noexcept { return entries_.rows(); }
    double operator()(std::size_t j, std::size_t k) const { return entries_(j, k); }
    const RealMatrix& entries() const noexcept { return entries_; }

    bool is_symmetric(double tol = 1e-12) const;

private:
    RealMatrix entries_;
};

using Edge = std::pair<std::size_t, std::size_t>;

// Uniform transitions along out-edges (P = D_out^-1 A). Vertices are 0-indexed;
// repeated edges count once. Throws ZeroOutDegree or InvalidInput.
TransitionMatrix from_adjacency(const std::vector<Edge>& edges, std::size_t n);

// Unique solution of pi P = pi with sum(pi) = 1. Throws NonUniqueStationary
// when the left eigenspace of eigenvalue 1 has dimension > 1.
RealVector stationary_distribution(const TransitionMatrix& p, const Tolerances& tol = {});

struct ChainProfile {
    bool irreducible = false;
    // Period of the recurrent class reached from state 0 (the whole chain
    // when irreducible).
    std::size_t period = 1;
    bool aperiodic = true;
    bool ergodic = false;
    // Absent when the stationary distribution is not unique.
    std::optional<bool> reversible;
    std::optional<RealVector> stationary;
};

ChainProfile classify(const TransitionMatrix& p, const Tolerances& tol = {});

// Short label in the style "redu, reve" / "ergodic, not reve" /
// "irred, periodic, reve".
std::string property_label(const ChainProfile& profile);

// Strongly connected components of the nonzero pattern, each sorted
// ascending, listed in order of their smallest vertex.
std::vector<std::vector<std::size_t>> strongly_connected_components(const TransitionMatrix& p);

}  // namespace mcqw

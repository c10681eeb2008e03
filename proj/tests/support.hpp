#pragma once

#include <cmath>
#include <vector>

#include "mcqw/linalg.hpp"
#include "mcqw/markov.hpp"
#include "mcqw/random_chain.hpp"

namespace mcqw::test {

inline TransitionMatrix matrix_chain(const std::vector<std::vector<double>>& rows) {
    RealMatrix m(rows.size(), rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t k = 0; k < rows.size(); ++k) m(j, k) = rows[j][k];
    return TransitionMatrix(m);
}

// The four small directed graphs, as edge lists (0-indexed).
inline TransitionMatrix reference_graph(int which) {
    switch (which) {
        case 1: return from_adjacency({{0, 0}, {1, 0}}, 2);
        case 2: return from_adjacency({{0, 0}, {0, 1}, {1, 0}}, 2);
        case 3: return from_adjacency({{0, 1}, {0, 2}, {1, 0}, {2, 1}}, 3);
        default: return from_adjacency({{0, 1}, {1, 0}, {1, 2}, {2, 1}}, 3);
    }
}

inline RealVector reference_limit(int which) {
    switch (which) {
        case 1: return {0.75, 0.25};
        case 2: return {2.0 / 3.0, 1.0 / 3.0};
        case 3: return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
        default: return {0.25, 0.5, 0.25};
    }
}

inline RealVector reference_stationary(int which) {
    switch (which) {
        case 1: return {1.0, 0.0};
        case 2: return {2.0 / 3.0, 1.0 / 3.0};
        case 3: return {0.4, 0.4, 0.2};
        default: return {0.25, 0.5, 0.25};
    }
}

inline double max_diff(const RealVector& a, const RealVector& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline RealMatrix random_symmetric_matrix(std::size_t n, SplitMix64& rng) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = 2.0 * rng.uniform() - 1.0;
    return m;
}

// Random edge set where every vertex keeps at least one out-edge.
inline std::vector<Edge> random_edges(std::size_t n, double density, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < n; ++j) {
        bool any = false;
        for (std::size_t k = 0; k < n; ++k)
            if (rng.uniform() < density) {
                edges.emplace_back(j, k);
                any = true;
            }
        if (!any) edges.emplace_back(j, rng.between(0, n - 1));
    }
    return edges;
}

// Warshall transitive closure.
inline bool reachability_irreducible(const TransitionMatrix& p) {
    const std::size_t n = p.n();
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = i == j || p(i, j) > 0.0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = 1;
    for (const auto& row : r)
        for (char c : row)
            if (!c) return false;
    return true;
}

inline RealVector row_times(const RealVector& pi, const TransitionMatrix& p) {
    RealVector out(p.n(), 0.0);
    for (std::size_t j = 0; j < p.n(); ++j)
        for (std::size_t k = 0; k < p.n(); ++k) out[k] += pi[j] * p(j, k);
    return out;
}

}  // namespace mcqw::test

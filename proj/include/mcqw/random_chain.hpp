#pragma once

#include <cstdint>

#include "mcqw/markov.hpp"

namespace mcqw {

// splitmix64; fixed arithmetic so every platform draws the same stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept {
        return lo + next() % (hi - lo + 1);
    }

    // Standard exponential by inversion.
    double exponential() noexcept;

private:
    std::uint64_t state_;
};

// Rows drawn uniformly from the probability simplex (normalized exponentials).
// Every entry is positive, so the chain is irreducible and aperiodic.
TransitionMatrix random_dirichlet_chain(std::size_t n, SplitMix64& rng);

// Symmetric (hence doubly stochastic) chain: a Dirichlet-weighted mixture of
// n random involutive permutation matrices.
TransitionMatrix random_symmetric_chain(std::size_t n, SplitMix64& rng);

// Random walk on a complete graph with symmetric positive edge weights
// (p_jk = w_jk / sum_k w_jk): irreducible and reversible, with stationary
// distribution proportional to the weighted degrees.
TransitionMatrix random_reversible_chain(std::size_t n, SplitMix64& rng);

}  // namespace mcqw

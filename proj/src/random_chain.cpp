#include "mcqw/random_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

namespace mcqw {

double SplitMix64::exponential() noexcept { return -std::log1p(-uniform()); }

TransitionMatrix random_dirichlet_chain(std::size_t n, SplitMix64& rng) {
    RealMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            // Keep entries strictly positive; a zero draw has probability 2^-53.
            m(j, k) = rng.exponential() + 1e-300;
            sum += m(j, k);
        }
        for (std::size_t k = 0; k < n; ++k) m(j, k) /= sum;
    }
    return TransitionMatrix(std::move(m));
}

namespace {

// Random involution: shuffle the vertices, then pair consecutive ones with
// probability 1/2 each; unpaired vertices are fixed points.
std::vector<std::size_t> random_involution(std::size_t n, SplitMix64& rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.between(0, i - 1)]);
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    for (std::size_t i = 0; i + 1 < n; i += 2)
        if (rng.next() & 1U) {
            image[order[i]] = order[i + 1];
            image[order[i + 1]] = order[i];
        }
    return image;
}

}  // namespace

TransitionMatrix random_symmetric_chain(std::size_t n, SplitMix64& rng) {
    const std::size_t parts = n;
    std::vector<double> weight(parts);
    double total = 0.0;
    for (double& w : weight) total += (w = rng.exponential() + 1e-300);

    RealMatrix m(n, n);
    for (std::size_t p = 0; p < parts; ++p) {
        const auto image = random_involution(n, rng);
        for (std::size_t j = 0; j < n; ++j) m(j, image[j]) += weight[p] / total;
    }
    // A fixed point of every involution can round to 1 + ulp on the diagonal.
    for (std::size_t j = 0; j < n; ++j) m(j, j) = std::min(m(j, j), 1.0);
    // Each involution adds the same weight at (j, i) and (i, j), so the sum is
    // symmetric; every row collects each weight once.
    return TransitionMatrix(std::move(m));
}

TransitionMatrix random_reversible_chain(std::size_t n, SplitMix64& rng) {
    RealMatrix w(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) w(j, k) = w(k, j) = rng.exponential() + 1e-300;
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) sum += w(j, k);
        for (std::size_t k = 0; k < n; ++k) w(j, k) /= sum;
    }
    return TransitionMatrix(std::move(w));
}

}  // namespace mcqw

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcqw/linalg.hpp"
#include "mcqw/markov.hpp"
#include "mcqw/tolerances.hpp"

namespace mcqw {

// A state in the edge space span{|jk>}; amplitude of |jk> lives at j*n + k.
struct EdgeState {
    std::size_t n = 0;
    ComplexVector amplitudes;

    static EdgeState basis(std::size_t n, std::size_t j, std::size_t k);

    complex operator()(std::size_t j, std::size_t k) const { return amplitudes[j * n + k]; }
    double norm() const { return mcqw::norm(amplitudes); }
};

// The quantized walk U = S(2 Pi - 1) of a transition matrix, together with
// the operators that relate it to the chain.
class QuantizedWalk {
public:
    // The dense n^2 x n^2 operator is only materialized for n <= dense_limit;
    // evolution always goes through the matrix-free apply().
    explicit QuantizedWalk(TransitionMatrix p, std::size_t dense_limit = 48);

    std::size_t n() const noexcept { return p_.n(); }
    std::size_t dim() const noexcept { return n() * n(); }
    const TransitionMatrix& chain() const noexcept { return p_; }

    // n^2 x n, column j is psi_j = sum_k sqrt(p_jk) |jk>.
    const RealMatrix& a() const noexcept { return a_; }
    RealVector psi(std::size_t j) const { return a_.column(j); }
    // d_jk = sqrt(p_jk p_kj)
    const RealMatrix& d() const noexcept { return d_; }

    bool has_dense_u() const noexcept { return !u_.empty(); }
    // Throws PreconditionViolation when the dense operator was not built.
    const RealMatrix& u() const;

    // out = U in, in O(n^2): reflect about span{psi_j}, then swap.
    void apply(std::span<const complex> in, std::span<complex> out) const;
    ComplexVector apply(std::span<const complex> in) const;

    // A|x> for a vertex-space vector.
    ComplexVector lift(std::span<const complex> x) const;
    ComplexVector lift(std::span<const double> x) const;
    // A^dagger |v>
    ComplexVector lower(std::span<const complex> v) const;

private:
    TransitionMatrix p_;
    RealMatrix sqrt_p_;
    RealMatrix a_;
    RealMatrix d_;
    RealMatrix u_;
};

QuantizedWalk quantize(const TransitionMatrix& p);

// Swap S|jk> = |kj>.
std::size_t swapped_index(std::size_t n, std::size_t index) noexcept;
ComplexVector apply_swap(std::size_t n, std::span<const complex> v);
RealMatrix swap_matrix(std::size_t n);
// Pi = A A^T, the projector onto span{psi_j}.
RealMatrix projector(const QuantizedWalk& w);

// Max entrywise defects of the construction identities.
struct ConstructionDefects {
    double psi_orthonormality = 0.0;  // |<psi_a|psi_b> - delta_ab|
    double ata_identity = 0.0;        // A^T A vs I
    double aat_projector = 0.0;       // A A^T vs Pi built from the psi_j
    double atsa_bridge = 0.0;         // A^T S A vs D
    double unitarity = 0.0;           // U^T U vs I
    double max() const;
};

ConstructionDefects construction_defects(const QuantizedWalk& w);

// Orthonormal basis of span{psi_j, S psi_j}.
std::vector<ComplexVector> invariant_subspace_basis(const QuantizedWalk& w);
// Orthonormal basis of its orthogonal complement in the edge space.
std::vector<ComplexVector> complement_basis(const QuantizedWalk& w);

enum class EigenKind { Plus, Minus, Rotation };

struct SpectralEntry {
    complex mu;           // eigenvalue of U, |mu| = 1
    ComplexVector phi;    // unit eigenvector in the edge space
    double lambda = 0.0;  // eigenvalue of D it came from
    EigenKind kind = EigenKind::Rotation;
    std::size_t group = 0;
};

// Orthonormal eigenbasis of U on span{psi_j, S psi_j}, built from the
// eigendecomposition of D; `groups` partitions entries by equal mu.
struct SpectralBasis {
    std::vector<SpectralEntry> entries;
    std::vector<std::vector<std::size_t>> groups;

    std::size_t m() const noexcept { return entries.size(); }
};

SpectralBasis spectral_basis(const QuantizedWalk& w, const Tolerances& tol = {});

// n^-1/2 sum_j psi_j
EdgeState uniform_initial_state(const QuantizedWalk& w);

// U^t state
EdgeState evolve(const QuantizedWalk& w, const EdgeState& state, std::size_t t);

// out[j] = sum_k |<jk|state>|^2
RealVector position_distribution(const EdgeState& state);

// (1/T) sum_{t=1..T} P_t(. | alpha0)
RealVector cesaro_average(const QuantizedWalk& w, const EdgeState& alpha0, std::size_t steps);

// Norm of the part of `state` outside the span of the basis.
double subspace_residual(const SpectralBasis& basis, const EdgeState& state);

// Long-time average distribution from the spectral basis: sum over
// equal-eigenvalue groups g of the vertex marginals of Pi_g alpha0.
// Throws StateOutsideInvariantSubspace if alpha0 is not in the basis span.
RealVector limiting_distribution(const QuantizedWalk& w, const SpectralBasis& basis,
                                 const EdgeState& alpha0, const Tolerances& tol = {});

// The same quantity as the literal double sum over pairs (l, m) with
// |mu_l - mu_m| <= tol.eigenvalue_grouping. O(m^2 n^2); test oracle.
RealVector limiting_distribution_pairwise(const QuantizedWalk& w, const SpectralBasis& basis,
                                          const EdgeState& alpha0, const Tolerances& tol = {});

enum class CheckStatus { Passed, Failed, Skipped };

struct IdentityCheck {
    CheckStatus status = CheckStatus::Skipped;
    double max_error = 0.0;
    std::size_t cases = 0;
};

struct LemmaReport {
    IdentityCheck lemma1;  // <A^dagger S alpha0, w> = lambda sum_j w(j) / sqrt(n)
    IdentityCheck lemma2;  // symmetric P, lambda != 1: sum_j w(j) = 0
    IdentityCheck lemma3;  // symmetric P, eigenvalue-1 u orthogonal to 1/sqrt(n): <alpha0|Au> = 0

    bool all_passed() const;  // no Failed entry
};

// Lemmas 2 and 3 need a symmetric P. They are reported as Skipped otherwise,
// unless require_symmetric is set, in which case PreconditionViolation is thrown.
LemmaReport verify_lemma_identities(const QuantizedWalk& w, const Tolerances& tol = {},
                                    bool require_symmetric = false);

const char* to_string(CheckStatus status) noexcept;

}  // namespace mcqw

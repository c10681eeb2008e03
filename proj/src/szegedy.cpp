#include "mcqw/szegedy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcqw/errors.hpp"

namespace mcqw {

EdgeState EdgeState::basis(std::size_t n, std::size_t j, std::size_t k) {
    EdgeState s{n, ComplexVector(n * n)};
    s.amplitudes[j * n + k] = 1.0;
    return s;
}

QuantizedWalk::QuantizedWalk(TransitionMatrix p, std::size_t dense_limit)
    : p_(std::move(p)) {
    const std::size_t n = p_.n();
    sqrt_p_ = RealMatrix(n, n);
    a_ = RealMatrix(n * n, n);
    d_ = RealMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            sqrt_p_(j, k) = std::sqrt(p_(j, k));
            a_(j * n + k, j) = sqrt_p_(j, k);
            d_(j, k) = std::sqrt(p_(j, k) * p_(k, j));
        }

    if (n <= dense_limit) {
        // U_(jk),(ab) = 2 Pi_(kj),(ab) - delta, and Pi_(kj),(ab) is nonzero only for a = k.
        u_ = RealMatrix(n * n, n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = j * n + k;
                for (std::size_t b = 0; b < n; ++b) u_(row, k * n + b) = 2.0 * sqrt_p_(k, j) * sqrt_p_(k, b);
                u_(row, k * n + j) -= 1.0;
            }
    }
}

const RealMatrix& QuantizedWalk::u() const {
    if (u_.empty())
        throw Error(ErrorKind::PreconditionViolation, "dense walk operator not built for n = " + std::to_string(n()));
    return u_;
}

void QuantizedWalk::apply(std::span<const complex> in, std::span<complex> out) const {
    const std::size_t n = this->n();
    if (in.size() != n * n || out.size() != n * n)
        throw Error(ErrorKind::InvalidInput, "apply: state dimension does not match the walk");
    for (std::size_t j = 0; j < n; ++j) {
        complex c{};
        for (std::size_t k = 0; k < n; ++k) c += sqrt_p_(j, k) * in[j * n + k];
        for (std::size_t k = 0; k < n; ++k) out[k * n + j] = 2.0 * c * sqrt_p_(j, k) - in[j * n + k];
    }
}

ComplexVector QuantizedWalk::apply(std::span<const complex> in) const {
    ComplexVector out(in.size());
    apply(in, out);
    return out;
}

ComplexVector QuantizedWalk::lift(std::span<const complex> x) const {
    const std::size_t n = this->n();
    ComplexVector out(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[j * n + k] = sqrt_p_(j, k) * x[j];
    return out;
}

ComplexVector QuantizedWalk::lift(std::span<const double> x) const {
    ComplexVector cx(x.begin(), x.end());
    return lift(std::span<const complex>(cx));
}

ComplexVector QuantizedWalk::lower(std::span<const complex> v) const {
    const std::size_t n = this->n();
    ComplexVector out(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[j] += sqrt_p_(j, k) * v[j * n + k];
    return out;
}

QuantizedWalk quantize(const TransitionMatrix& p) { return QuantizedWalk(p); }

std::size_t swapped_index(std::size_t n, std::size_t index) noexcept {
    return (index % n) * n + index / n;
}

ComplexVector apply_swap(std::size_t n, std::span<const complex> v) {
    ComplexVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[swapped_index(n, i)] = v[i];
    return out;
}

RealMatrix swap_matrix(std::size_t n) {
    RealMatrix s(n * n, n * n);
    for (std::size_t i = 0; i < n * n; ++i) s(swapped_index(n, i), i) = 1.0;
    return s;
}

RealMatrix projector(const QuantizedWalk& w) {
    const std::size_t n = w.n();
    RealMatrix pi(n * n, n * n);
    for (std::size_t j = 0; j < n; ++j) {
        const RealVector psi = w.psi(j);
        for (std::size_t r = 0; r < n * n; ++r) {
            if (psi[r] == 0.0) continue;
            for (std::size_t c = 0; c < n * n; ++c) pi(r, c) += psi[r] * psi[c];
        }
    }
    return pi;
}

double ConstructionDefects::max() const {
    return std::max({psi_orthonormality, ata_identity, aat_projector, atsa_bridge, unitarity});
}

ConstructionDefects construction_defects(const QuantizedWalk& w) {
    const std::size_t n = w.n();
    ConstructionDefects out;

    std::vector<RealVector> psi(n);
    for (std::size_t j = 0; j < n; ++j) psi[j] = w.psi(j);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            out.psi_orthonormality =
                std::max(out.psi_orthonormality, std::abs(dot(psi[a], psi[b]) - (a == b ? 1.0 : 0.0)));

    const RealMatrix at = transpose(w.a());
    out.ata_identity = max_abs_diff(multiply(at, w.a()), RealMatrix::identity(n));
    out.aat_projector = max_abs_diff(multiply(w.a(), at), projector(w));
    out.atsa_bridge = max_abs_diff(multiply(at, multiply(swap_matrix(n), w.a())), w.d());
    out.unitarity = w.has_dense_u() ? unitarity_defect(w.u()) : 0.0;
    return out;
}

std::vector<ComplexVector> invariant_subspace_basis(const QuantizedWalk& w) {
    std::vector<ComplexVector> spanning;
    for (std::size_t j = 0; j < w.n(); ++j) {
        const RealVector psi = w.psi(j);
        ComplexVector v(psi.begin(), psi.end());
        spanning.push_back(apply_swap(w.n(), v));
        spanning.push_back(std::move(v));
    }
    return gram_schmidt(spanning);
}

std::vector<ComplexVector> complement_basis(const QuantizedWalk& w) {
    std::vector<ComplexVector> vectors = invariant_subspace_basis(w);
    const std::size_t inside = vectors.size();
    for (std::size_t i = 0; i < w.dim(); ++i) {
        ComplexVector e(w.dim());
        e[i] = 1.0;
        vectors.push_back(std::move(e));
    }
    std::vector<ComplexVector> all = gram_schmidt(vectors);
    return {all.begin() + static_cast<std::ptrdiff_t>(inside), all.end()};
}

SpectralBasis spectral_basis(const QuantizedWalk& w, const Tolerances& tol) {
    const std::size_t n = w.n();
    const SymmetricSpectrum eig = symmetric_eig(w.d(), tol);
    SpectralBasis out;

    for (std::size_t l = 0; l < n; ++l) {
        const double lambda = eig.eigenvalues[l];
        const ComplexVector aw = w.lift(std::span<const double>(eig.vector(l)));
        if (std::abs(lambda - 1.0) <= tol.unit_eigenvalue) {
            out.entries.push_back({complex{1.0, 0.0}, aw, lambda, EigenKind::Plus});
            continue;
        }
        if (std::abs(lambda + 1.0) <= tol.unit_eigenvalue) {
            out.entries.push_back({complex{-1.0, 0.0}, aw, lambda, EigenKind::Minus});
            continue;
        }
        const double norm2 = 2.0 - 2.0 * lambda * lambda;
        if (norm2 <= 1e-12)
            throw Error(ErrorKind::DegenerateNormalization,
                        "eigenvalue " + std::to_string(lambda) + " of D is too close to +-1");
        const double theta = std::acos(std::clamp(lambda, -1.0, 1.0));
        const ComplexVector saw = apply_swap(n, aw);
        for (const double sign : {1.0, -1.0}) {
            const complex mu = std::polar(1.0, sign * theta);
            ComplexVector phi(aw.size());
            const double scale = 1.0 / std::sqrt(norm2);
            for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = (aw[i] - mu * saw[i]) * scale;
            out.entries.push_back({mu, std::move(phi), lambda, EigenKind::Rotation});
        }
    }

    for (std::size_t e = 0; e < out.entries.size(); ++e) {
        auto& entry = out.entries[e];
        auto it = std::find_if(out.groups.begin(), out.groups.end(), [&](const auto& g) {
            return std::abs(out.entries[g.front()].mu - entry.mu) <= tol.eigenvalue_grouping;
        });
        if (it == out.groups.end()) {
            entry.group = out.groups.size();
            out.groups.push_back({e});
        } else {
            entry.group = static_cast<std::size_t>(it - out.groups.begin());
            it->push_back(e);
        }
    }
    return out;
}

EdgeState uniform_initial_state(const QuantizedWalk& w) {
    const std::size_t n = w.n();
    const ComplexVector ones(n, complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
    return {n, w.lift(std::span<const complex>(ones))};
}

EdgeState evolve(const QuantizedWalk& w, const EdgeState& state, std::size_t t) {
    if (state.n != w.n()) throw Error(ErrorKind::InvalidInput, "evolve: state dimension does not match the walk");
    EdgeState cur = state;
    ComplexVector next(cur.amplitudes.size());
    for (std::size_t s = 0; s < t; ++s) {
        w.apply(cur.amplitudes, next);
        cur.amplitudes.swap(next);
    }
    return cur;
}

RealVector position_distribution(const EdgeState& state) {
    RealVector out(state.n, 0.0);
    for (std::size_t j = 0; j < state.n; ++j)
        for (std::size_t k = 0; k < state.n; ++k) out[j] += std::norm(state(j, k));
    return out;
}

RealVector cesaro_average(const QuantizedWalk& w, const EdgeState& alpha0, std::size_t steps) {
    if (steps == 0) throw Error(ErrorKind::InvalidInput, "cesaro_average: T must be positive");
    if (alpha0.n != w.n()) throw Error(ErrorKind::InvalidInput, "cesaro_average: state dimension does not match the walk");
    const std::size_t n = w.n();
    RealVector acc(n, 0.0);
    ComplexVector cur = alpha0.amplitudes;
    ComplexVector next(cur.size());
    for (std::size_t t = 1; t <= steps; ++t) {
        w.apply(cur, next);
        cur.swap(next);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) acc[j] += std::norm(cur[j * n + k]);
    }
    for (double& v : acc) v /= static_cast<double>(steps);
    return acc;
}

namespace {

ComplexVector overlaps(const SpectralBasis& basis, const EdgeState& state) {
    ComplexVector c(basis.m());
    for (std::size_t l = 0; l < basis.m(); ++l) c[l] = inner(basis.entries[l].phi, state.amplitudes);
    return c;
}

}  // namespace

double subspace_residual(const SpectralBasis& basis, const EdgeState& state) {
    ComplexVector r = state.amplitudes;
    const ComplexVector c = overlaps(basis, state);
    for (std::size_t l = 0; l < basis.m(); ++l)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c[l] * basis.entries[l].phi[i];
    return norm(r);
}

RealVector limiting_distribution(const QuantizedWalk& w, const SpectralBasis& basis, const EdgeState& alpha0,
                                 const Tolerances& tol) {
    if (alpha0.n != w.n()) throw Error(ErrorKind::InvalidInput, "limiting_distribution: state dimension does not match the walk");
    const double residual = subspace_residual(basis, alpha0);
    if (residual > tol.subspace_membership)
        throw Error(ErrorKind::StateOutsideInvariantSubspace,
                    "initial state has a component of norm " + std::to_string(residual) +
                        " outside span{psi_j, S psi_j}");

    const std::size_t n = w.n();
    const ComplexVector c = overlaps(basis, alpha0);
    RealVector out(n, 0.0);
    ComplexVector part(w.dim());
    for (const auto& group : basis.groups) {
        std::fill(part.begin(), part.end(), complex{});
        for (std::size_t l : group)
            for (std::size_t i = 0; i < part.size(); ++i) part[i] += c[l] * basis.entries[l].phi[i];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[j] += std::norm(part[j * n + k]);
    }
    return out;
}

RealVector limiting_distribution_pairwise(const QuantizedWalk& w, const SpectralBasis& basis,
                                          const EdgeState& alpha0, const Tolerances& tol) {
    const std::size_t n = w.n();
    const ComplexVector c = overlaps(basis, alpha0);
    RealVector out(n, 0.0);
    for (std::size_t l = 0; l < basis.m(); ++l)
        for (std::size_t m = 0; m < basis.m(); ++m) {
            if (std::abs(basis.entries[l].mu - basis.entries[m].mu) > tol.eigenvalue_grouping) continue;
            const auto& pl = basis.entries[l].phi;
            const auto& pm = basis.entries[m].phi;
            const complex weight = c[l] * std::conj(c[m]);
            for (std::size_t j = 0; j < n; ++j) {
                complex s{};
                for (std::size_t k = 0; k < n; ++k) s += pl[j * n + k] * std::conj(pm[j * n + k]);
                out[j] += (weight * s).real();
            }
        }
    return out;
}

bool LemmaReport::all_passed() const {
    return lemma1.status != CheckStatus::Failed && lemma2.status != CheckStatus::Failed &&
           lemma3.status != CheckStatus::Failed;
}

namespace {

void record(IdentityCheck& check, double error, double tol) {
    check.max_error = std::max(check.max_error, error);
    ++check.cases;
    check.status = check.max_error <= tol ? CheckStatus::Passed : CheckStatus::Failed;
}

}  // namespace

LemmaReport verify_lemma_identities(const QuantizedWalk& w, const Tolerances& tol, bool require_symmetric) {
    const std::size_t n = w.n();
    const bool symmetric = w.chain().is_symmetric();
    if (require_symmetric && !symmetric)
        throw Error(ErrorKind::PreconditionViolation, "lemma identities 2 and 3 require a symmetric transition matrix");

    const SymmetricSpectrum eig = symmetric_eig(w.d(), tol);
    const EdgeState alpha0 = uniform_initial_state(w);
    const double root_n = std::sqrt(static_cast<double>(n));
    LemmaReport report;

    // Vacuous (no eigenvalue away from +-1) still counts as holding.
    report.lemma1.status = CheckStatus::Passed;
    const ComplexVector at_s_alpha = w.lower(apply_swap(n, alpha0.amplitudes));
    for (std::size_t l = 0; l < n; ++l) {
        const double lambda = eig.eigenvalues[l];
        if (std::abs(std::abs(lambda) - 1.0) <= tol.unit_eigenvalue) continue;
        const RealVector v = eig.vector(l);
        complex lhs{};
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            lhs += at_s_alpha[j] * v[j];
            sum += v[j];
        }
        record(report.lemma1, std::abs(lhs - lambda * sum / root_n), tol.lemma);
    }

    if (!symmetric) return report;

    report.lemma2.status = CheckStatus::Passed;
    std::vector<ComplexVector> unit_space{ComplexVector(n, complex{1.0 / root_n, 0.0})};
    for (std::size_t l = 0; l < n; ++l) {
        const double lambda = eig.eigenvalues[l];
        const RealVector v = eig.vector(l);
        if (std::abs(lambda - 1.0) <= tol.unit_eigenvalue) {
            unit_space.emplace_back(v.begin(), v.end());
            continue;
        }
        double sum = 0.0;
        for (double x : v) sum += x;
        record(report.lemma2, std::abs(sum), tol.lemma);
    }

    // Rotate the eigenvalue-1 eigenspace so its first vector is u0; the rest
    // are eigenvectors orthogonal to u0.
    report.lemma3.status = CheckStatus::Passed;
    const auto ortho = gram_schmidt(unit_space);
    for (std::size_t i = 1; i < ortho.size(); ++i) {
        const ComplexVector au = w.lift(std::span<const complex>(ortho[i]));
        record(report.lemma3, std::abs(inner(alpha0.amplitudes, au)), tol.lemma);
    }
    return report;
}

const char* to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::Passed: return "passed";
        case CheckStatus::Failed: return "failed";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

}  // namespace mcqw

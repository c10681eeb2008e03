#include "mcqw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mcqw/errors.hpp"

namespace mcqw {

namespace {

double offdiag_frobenius(const RealMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double frobenius(const RealMatrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

// Annihilates a(p,q) with a single rotation, accumulating it into v.
void rotate(RealMatrix& a, RealMatrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = a(q, p) = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const double arp = a(r, p);
        const double arq = a(r, q);
        a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
        a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
    }
    for (std::size_t r = 0; r < n; ++r) {
        const double vrp = v(r, p);
        const double vrq = v(r, q);
        v(r, p) = vrp - s * (vrq + tau * vrp);
        v(r, q) = vrq + s * (vrp - tau * vrq);
    }
}

}  // namespace

SymmetricSpectrum symmetric_eig(const RealMatrix& m, const Tolerances& tol) {
    if (!m.square()) throw Error(ErrorKind::NotSymmetric, "symmetric_eig: matrix is not square");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol.symmetry)
                throw Error(ErrorKind::NotSymmetric,
                            "symmetric_eig: |M - M^T| exceeds tolerance at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");

    RealMatrix a = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
    RealMatrix v = RealMatrix::identity(n);

    const double stop = tol.jacobi_offdiag * std::max(1.0, frobenius(a));
    int sweep = 0;
    while (offdiag_frobenius(a) > stop) {
        if (sweep++ >= tol.jacobi_max_sweeps)
            throw Error(ErrorKind::NoConvergence, "symmetric_eig: no convergence after " +
                                                      std::to_string(tol.jacobi_max_sweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0) rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

    SymmetricSpectrum out{RealVector(n), RealMatrix(n, n)};
    for (std::size_t l = 0; l < n; ++l) {
        out.eigenvalues[l] = a(order[l], order[l]);
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, l) = v(r, order[l]);
    }
    return out;
}

ComplexMatrix to_complex(const RealMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

RealMatrix transpose(const RealMatrix& m) {
    RealMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

template <typename T>
static Matrix<T> multiply_impl(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidInput, "multiply: dimension mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const T ail = a(i, l);
            if (ail == T{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
        }
    return out;
}

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) { return multiply_impl(a, b); }
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply_impl(a, b); }

template <typename M, typename V, typename R>
static std::vector<R> matvec(const M& a, std::span<const V> v) {
    if (a.cols() != v.size()) throw Error(ErrorKind::InvalidInput, "multiply: dimension mismatch");
    std::vector<R> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        R s{};
        const auto row = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * v[j];
        out[i] = s;
    }
    return out;
}

RealVector multiply(const RealMatrix& a, std::span<const double> v) {
    return matvec<RealMatrix, double, double>(a, v);
}
ComplexVector multiply(const RealMatrix& a, std::span<const complex> v) {
    return matvec<RealMatrix, complex, complex>(a, v);
}
ComplexVector multiply(const ComplexMatrix& a, std::span<const complex> v) {
    return matvec<ComplexMatrix, complex, complex>(a, v);
}

template <typename T>
static double max_abs_diff_impl(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::InvalidInput, "max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) { return max_abs_diff_impl(a, b); }
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs_diff_impl(a, b); }

double unitarity_defect(const ComplexMatrix& u) {
    if (!u.square()) throw Error(ErrorKind::InvalidInput, "unitarity_defect: matrix is not square");
    const std::size_t n = u.rows();
    double worst = 0.0;
    // (U^dagger U)_ij = sum_r conj(u_ri) u_rj
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            complex s{};
            for (std::size_t r = 0; r < n; ++r) s += std::conj(u(r, i)) * u(r, j);
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

double unitarity_defect(const RealMatrix& u) {
    if (!u.square()) throw Error(ErrorKind::InvalidInput, "unitarity_defect: matrix is not square");
    const std::size_t n = u.rows();
    // Column access is strided, so work on the transpose's rows.
    const RealMatrix ut = transpose(u);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double s = dot(ut.row(i), ut.row(j));
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

complex inner(std::span<const complex> a, std::span<const complex> b) {
    assert(a.size() == b.size());
    complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const complex> v) {
    double s = 0.0;
    for (const complex& z : v) s += std::norm(z);
    return std::sqrt(s);
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

std::vector<ComplexVector> gram_schmidt(const std::vector<ComplexVector>& vectors, double drop) {
    std::vector<ComplexVector> basis;
    for (const ComplexVector& v : vectors) {
        ComplexVector r = v;
        const double original = norm(r);
        if (original == 0.0) continue;
        // Two passes keep the result orthogonal to working precision.
        for (int pass = 0; pass < 2; ++pass)
            for (const ComplexVector& b : basis) {
                const complex c = inner(b, r);
                for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * b[i];
            }
        const double nr = norm(r);
        if (nr <= drop * std::max(1.0, original)) continue;
        for (complex& z : r) z /= nr;
        basis.push_back(std::move(r));
    }
    return basis;
}
}  // namespace mcqw

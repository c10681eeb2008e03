#pragma once

#include <cassert>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mcqw/tolerances.hpp"

namespace mcqw {

using complex = std::complex<double>;

// Dense row-major matrix. Small sizes only (n^2 x n^2 for n up to a few dozen).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    std::span<const T> data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<complex>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<complex>;

// Eigenpairs of a real symmetric matrix, eigenvalues ascending; eigenvector l
// is column l of `eigenvectors`.
struct SymmetricSpectrum {
    RealVector eigenvalues;
    RealMatrix eigenvectors;

    RealVector vector(std::size_t l) const { return eigenvectors.column(l); }
};

// Cyclic Jacobi rotations. Throws NotSymmetric or NoConvergence.
SymmetricSpectrum symmetric_eig(const RealMatrix& m, const Tolerances& tol = {});

// ||U^dagger U - I||_max
double unitarity_defect(const ComplexMatrix& u);
double unitarity_defect(const RealMatrix& u);

ComplexMatrix to_complex(const RealMatrix& m);

RealMatrix transpose(const RealMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);
RealMatrix multiply(const RealMatrix& a, const RealMatrix& b);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

RealVector multiply(const RealMatrix& a, std::span<const double> v);
ComplexVector multiply(const RealMatrix& a, std::span<const complex> v);
ComplexVector multiply(const ComplexMatrix& a, std::span<const complex> v);

double max_abs_diff(const RealMatrix& a, const RealMatrix& b);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// <a|b>, conjugate-linear in the first argument.
complex inner(std::span<const complex> a, std::span<const complex> b);
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const complex> v);
double norm(std::span<const double> v);

// Modified Gram-Schmidt with reorthogonalization. Vectors whose residual norm
// falls below `drop` after projecting out the earlier ones are discarded.
std::vector<ComplexVector> gram_schmidt(const std::vector<ComplexVector>& vectors,
                                        double drop = 1e-10);

}  // namespace mcqw

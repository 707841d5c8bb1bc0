#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dipolar {

using complexd = std::complex<double>;

// Dense row-major complex matrix. Small dimensions only (two-particle
// spaces stay below ~400, exponentials below 64), so everything is a
// plain O(n^3)-or-better dense routine with value semantics.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complexd> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    complexd& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const complexd& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<complexd>& entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(complexd scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(complexd scalar, ComplexMatrix m) { return m *= scalar; }
    friend ComplexMatrix operator*(ComplexMatrix m, complexd scalar) { return m *= scalar; }
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;

    // column of basis vector e_k times the matrix, i.e. A * e_k
    std::vector<complexd> column(std::size_t c) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complexd> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

// max |A - A^dagger| over entries; zero for exactly Hermitian input
double hermiticity_deviation(const ComplexMatrix& a);

// Eigendecomposition of a Hermitian matrix, A = V diag(values) V^dagger,
// eigenvalues ascending, eigenvectors in the columns of `vectors`.
struct HermitianEigensystem {
    std::vector<double> values;
    ComplexMatrix vectors;
};

// Cyclic Jacobi diagonalization. The input is symmetrized as (A+A^dagger)/2
// before sweeping; callers wanting a hermiticity guard use expm_hermitian.
HermitianEigensystem eigh(const ComplexMatrix& a);

// exp(i * scale * h) for Hermitian h, via eigh. Throws NonHermitianInput when
// max|h - h^dagger| > 1e-10 * max|h|.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale);

// Spectral norm (largest singular value), via eigh of the Gram matrix.
double operator_norm(const ComplexMatrix& a);

} // namespace dipolar

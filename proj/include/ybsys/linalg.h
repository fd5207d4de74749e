// Copyright 2026 The ybsys Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef YBSYS_LINALG_H
#define YBSYS_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ybsys {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr Complex kI{0.0, 1.0};

/// Dense complex vector. Immutable once built.
class ComplexVector {
   public:
    ComplexVector() = default;
    explicit ComplexVector(std::vector<Complex> entries);
    static ComplexVector zeros(std::size_t dim);
    static ComplexVector unit(std::size_t dim, std::size_t index);

    std::size_t dim() const { return entries_.size(); }
    const Complex &operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Complex> entries() const { return entries_; }

    double norm() const;
    ComplexVector normalized() const;

    ComplexVector operator+(const ComplexVector &other) const;
    ComplexVector operator-(const ComplexVector &other) const;
    ComplexVector operator*(Complex scale) const;

    bool operator==(const ComplexVector &other) const = default;

   private:
    std::vector<Complex> entries_;
};

/// Hermitian inner product <a|b>, antilinear in the first argument.
Complex inner(const ComplexVector &a, const ComplexVector &b);

/// Dense complex matrix, row-major. Immutable once built; every operation
/// returns a fresh value and every constructor rejects non-finite entries.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// Matrix whose columns are the given vectors (all of equal dimension).
    static ComplexMatrix from_columns(std::span<const ComplexVector> columns);
    static ComplexMatrix outer(const ComplexVector &ket, const ComplexVector &bra);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return entries_; }
    ComplexVector column(std::size_t c) const;

    Complex trace() const;
    double frobenius_norm() const;
    ComplexMatrix conj() const;
    ComplexMatrix transpose() const;

    ComplexMatrix operator+(const ComplexMatrix &other) const;
    ComplexMatrix operator-(const ComplexMatrix &other) const;
    ComplexMatrix operator-() const;
    ComplexMatrix operator*(Complex scale) const;
    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexVector operator*(const ComplexVector &v) const;

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

inline ComplexMatrix operator*(Complex scale, const ComplexMatrix &m) { return m * scale; }
inline ComplexVector operator*(Complex scale, const ComplexVector &v) { return v * scale; }

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product. The left factor occupies the most significant index, so
/// kron(X_A, Y_B) acts on |ab> = |a> (x) |b> with a as the high bit.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

ComplexMatrix dagger(const ComplexMatrix &a);

/// ||a - b||_F. Throws DimensionMismatch on shape mismatch.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// ||a - a^dagger||_F <= tol * ||a||_F (true for the zero matrix).
bool is_hermitian(const ComplexMatrix &a, double tol = kDefaultTol);

struct EigenDecomposition {
    std::vector<double> eigenvalues;            // ascending
    std::vector<ComplexVector> eigenvectors;    // orthonormal, same order
    int sweeps = 0;
    double off_diagonal = 0.0;                  // final off-diagonal Frobenius mass

    ComplexMatrix vectors() const { return ComplexMatrix::from_columns(eigenvectors); }
};

/// Spectral decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws InvalidInput when `a` is not Hermitian within `tol`, and
/// NumericalFailure when the sweep budget runs out. Degenerate eigenvalues come
/// back with an arbitrary orthonormal basis of their eigenspace.
EigenDecomposition eigh(const ComplexMatrix &a, double tol = kDefaultTol);

/// Reduced density matrix on the qubits in `keep` (0 is the most significant
/// qubit). Kept qubits retain their relative order.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const int> keep, int n_qubits,
                            double tol = kDefaultTol);
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::initializer_list<int> keep, int n_qubits,
                            double tol = kDefaultTol);

/// Orthonormal basis of span{vectors} by modified Gram-Schmidt; vectors whose
/// residual norm falls below `drop_tol` are skipped.
std::vector<ComplexVector> orthonormalize(std::span<const ComplexVector> vectors, double drop_tol = 1e-10);

/// Q Q^dagger for an orthonormal set Q.
ComplexMatrix projector(std::span<const ComplexVector> orthonormal);

}  // namespace ybsys

#endif

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

#include "ybsys/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ybsys/errors.h"

namespace ybsys {

namespace {

void require_finite(std::span<const Complex> entries, const char *what) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw NumericalFailure(std::string(what) + ": non-finite entry");
        }
    }
}

std::string shape(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(op) + ": shapes " + shape(a) + " and " + shape(b) + " differ");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    require_finite(entries_, "ComplexVector");
}

ComplexVector ComplexVector::zeros(std::size_t dim) { return ComplexVector(std::vector<Complex>(dim)); }

ComplexVector ComplexVector::unit(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw InvalidInput("ComplexVector::unit: index out of range");
    }
    std::vector<Complex> e(dim);
    e[index] = 1.0;
    return ComplexVector(std::move(e));
}

double ComplexVector::norm() const {
    double s = 0.0;
    for (const auto &z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexVector ComplexVector::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw InvalidInput("ComplexVector::normalized: zero vector");
    }
    return *this * Complex(1.0 / n);
}

ComplexVector ComplexVector::operator+(const ComplexVector &other) const {
    if (dim() != other.dim()) throw DimensionMismatch("vector add: dimension mismatch");
    std::vector<Complex> e(dim());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = entries_[i] + other.entries_[i];
    return ComplexVector(std::move(e));
}

ComplexVector ComplexVector::operator-(const ComplexVector &other) const {
    if (dim() != other.dim()) throw DimensionMismatch("vector subtract: dimension mismatch");
    std::vector<Complex> e(dim());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = entries_[i] - other.entries_[i];
    return ComplexVector(std::move(e));
}

ComplexVector ComplexVector::operator*(Complex scale) const {
    std::vector<Complex> e(entries_);
    for (auto &z : e) z *= scale;
    return ComplexVector(std::move(e));
}

Complex inner(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("inner: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ * cols_ != entries_.size()) {
        throw DimensionMismatch("ComplexMatrix: " + std::to_string(entries_.size()) + " entries for shape " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ComplexMatrix: ragged initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    std::size_t n = values.size();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = values[i];
    return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
    if (columns.empty()) return {};
    std::size_t rows = columns.front().dim();
    std::size_t cols = columns.size();
    std::vector<Complex> e(rows * cols);
    for (std::size_t c = 0; c < cols; ++c) {
        if (columns[c].dim() != rows) throw DimensionMismatch("from_columns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r) e[r * cols + c] = columns[c][r];
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector &ket, const ComplexVector &bra) {
    std::vector<Complex> e(ket.dim() * bra.dim());
    for (std::size_t r = 0; r < ket.dim(); ++r) {
        for (std::size_t c = 0; c < bra.dim(); ++c) e[r * bra.dim() + c] = ket[r] * std::conj(bra[c]);
    }
    return ComplexMatrix(ket.dim(), bra.dim(), std::move(e));
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    if (c >= cols_) throw InvalidInput("column: index out of range");
    std::vector<Complex> e(rows_);
    for (std::size_t r = 0; r < rows_; ++r) e[r] = (*this)(r, c);
    return ComplexVector(std::move(e));
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace: matrix is " + shape(*this));
    Complex s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::conj() const {
    std::vector<Complex> e(entries_);
    for (auto &z : e) z = std::conj(z);
    return ComplexMatrix(rows_, cols_, std::move(e));
}

ComplexMatrix ComplexMatrix::transpose() const {
    std::vector<Complex> e(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = (*this)(r, c);
    }
    return ComplexMatrix(cols_, rows_, std::move(e));
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
    require_same_shape(*this, other, "add");
    std::vector<Complex> e(entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
    return ComplexMatrix(rows_, cols_, std::move(e));
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
    require_same_shape(*this, other, "subtract");
    std::vector<Complex> e(entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.entries_[i];
    return ComplexMatrix(rows_, cols_, std::move(e));
}

ComplexMatrix ComplexMatrix::operator-() const { return *this * Complex(-1.0); }

ComplexMatrix ComplexMatrix::operator*(Complex scale) const {
    std::vector<Complex> e(entries_);
    for (auto &z : e) z *= scale;
    return ComplexMatrix(rows_, cols_, std::move(e));
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const { return matmul(*this, other); }

ComplexVector ComplexMatrix::operator*(const ComplexVector &v) const {
    if (cols_ != v.dim()) throw DimensionMismatch("matrix-vector: " + shape(*this) + " times dim " + std::to_string(v.dim()));
    std::vector<Complex> e(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Complex s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
        e[r] = s;
    }
    return ComplexVector(std::move(e));
}

// ---------------------------------------------------------------------------
// Free operations

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: " + shape(a) + " times " + shape(b));
    }
    std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    std::vector<Complex> e(n * m);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex arj = a(r, j);
            if (arj == Complex(0.0)) continue;
            for (std::size_t c = 0; c < m; ++c) e[r * m + c] += arj * b(j, c);
        }
    }
    return ComplexMatrix(n, m, std::move(e));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    std::size_t rows = a.rows() * b.rows();
    std::size_t cols = a.cols() * b.cols();
    std::vector<Complex> e(rows * cols);
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            Complex x = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    e[(ar * b.rows() + br) * cols + ac * b.cols() + bc] = x * b(br, bc);
                }
            }
        }
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    std::vector<Complex> e(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) e[i * b.dim() + j] = a[i] * b[j];
    }
    return ComplexVector(std::move(e));
}

ComplexMatrix dagger(const ComplexMatrix &a) { return a.transpose().conj(); }

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "frobenius_distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) s += std::norm(a.entries()[i] - b.entries()[i]);
    return std::sqrt(s);
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) { return a * b - b * a; }

ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b) { return a * b + b * a; }

bool is_hermitian(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) return false;
    return frobenius_distance(a, dagger(a)) <= tol * a.frobenius_norm();
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi eigensolver.
//
// Each rotation acts on coordinates (p, q). A diagonal phase first makes the
// pivot a_pq real, then a real Jacobi rotation annihilates it:
//   U = [[c, s], [-s e^{-i beta}, c e^{-i beta}]],  beta = arg(a_pq),
// and A <- U^dagger A U, V <- V U.

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergedOff = 1e-15;   // relative off-diagonal mass, fully converged
constexpr double kInternalTarget = 1e-12; // relative off-diagonal mass, acceptable on stagnation

double off_diagonal_mass(const std::vector<Complex> &a, std::size_t n) {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p != q) s += std::norm(a[p * n + q]);
        }
    }
    return std::sqrt(s);
}

void rotate(std::vector<Complex> &a, std::vector<Complex> &v, std::size_t n, std::size_t p, std::size_t q) {
    Complex apq = a[p * n + q];
    double r = std::abs(apq);
    if (r == 0.0) return;
    Complex phase = apq / r;  // e^{i beta}
    double app = a[p * n + p].real();
    double aqq = a[q * n + q].real();

    double theta = (aqq - app) / (2.0 * r);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    double c = 1.0 / std::sqrt(t * t + 1.0);
    double s = t * c;
    Complex ph_minus = std::conj(phase);  // e^{-i beta}

    // A <- A U (columns p, q)
    for (std::size_t k = 0; k < n; ++k) {
        Complex akp = a[k * n + p];
        Complex akq = a[k * n + q];
        a[k * n + p] = c * akp - s * ph_minus * akq;
        a[k * n + q] = s * akp + c * ph_minus * akq;
    }
    // A <- U^dagger A (rows p, q)
    for (std::size_t k = 0; k < n; ++k) {
        Complex apk = a[p * n + k];
        Complex aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * phase * aqk;
        a[q * n + k] = s * apk + c * phase * aqk;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    a[p * n + p] = a[p * n + p].real();
    a[q * n + q] = a[q * n + q].real();

    for (std::size_t k = 0; k < n; ++k) {
        Complex vkp = v[k * n + p];
        Complex vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * ph_minus * vkq;
        v[k * n + q] = s * vkp + c * ph_minus * vkq;
    }
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) throw DimensionMismatch("eigh: matrix is " + shape(a));
    if (!is_hermitian(a, tol)) throw InvalidInput("eigh: matrix is not Hermitian within tolerance");

    std::size_t n = a.rows();
    // Work on the exactly Hermitian part.
    std::vector<Complex> w(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) w[r * n + c] = 0.5 * (a(r, c) + std::conj(a(c, r)));
    }
    std::vector<Complex> v(n * n);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    double scale = a.frobenius_norm();
    EigenDecomposition out;
    double off = off_diagonal_mass(w, n);
    double prev_off = off;
    int sweep = 0;
    while (scale > 0.0 && off > kConvergedOff * scale) {
        if (sweep >= kMaxSweeps) {
            throw NumericalFailure("eigh: no convergence after " + std::to_string(kMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) rotate(w, v, n, p, q);
        }
        ++sweep;
        prev_off = off;
        off = off_diagonal_mass(w, n);
        // Rounding floor reached: further sweeps no longer shrink the mass.
        if (off <= kInternalTarget * scale && off > 0.5 * prev_off) break;
    }
    out.sweeps = sweep;
    out.off_diagonal = off;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return w[i * n + i].real() < w[j * n + j].real(); });
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t idx : order) {
        out.eigenvalues.push_back(w[idx * n + idx].real());
        std::vector<Complex> col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + idx];
        out.eigenvectors.emplace_back(std::move(col));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Partial trace

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const int> keep, int n_qubits, double tol) {
    if (n_qubits < 1 || n_qubits > 16) throw InvalidInput("partial_trace: n_qubits out of range");
    std::size_t dim = std::size_t{1} << n_qubits;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw DimensionMismatch("partial_trace: expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                                ", got " + shape(rho));
    }
    if (!is_hermitian(rho, tol)) throw InvalidInput("partial_trace: rho is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > tol) throw InvalidInput("partial_trace: rho does not have unit trace");

    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw InvalidInput("partial_trace: duplicate qubit in keep set");
    }
    for (int q : kept) {
        if (q < 0 || q >= n_qubits) throw InvalidInput("partial_trace: qubit index out of range");
    }
    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
    }

    // Bit position of qubit q in a basis index: qubit 0 is the most significant.
    auto bit_of = [n_qubits](int q) { return n_qubits - 1 - q; };
    auto scatter = [&](std::size_t bits, const std::vector<int> &qubits) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            std::size_t b = (bits >> (qubits.size() - 1 - j)) & 1u;
            idx |= b << bit_of(qubits[j]);
        }
        return idx;
    };

    std::size_t kdim = std::size_t{1} << kept.size();
    std::size_t tdim = std::size_t{1} << traced.size();
    std::vector<Complex> e(kdim * kdim);
    for (std::size_t r = 0; r < kdim; ++r) {
        std::size_t rbase = scatter(r, kept);
        for (std::size_t c = 0; c < kdim; ++c) {
            std::size_t cbase = scatter(c, kept);
            Complex s = 0.0;
            for (std::size_t t = 0; t < tdim; ++t) {
                std::size_t toff = scatter(t, traced);
                s += rho(rbase | toff, cbase | toff);
            }
            e[r * kdim + c] = s;
        }
    }
    return ComplexMatrix(kdim, kdim, std::move(e));
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::initializer_list<int> keep, int n_qubits, double tol) {
    return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()), n_qubits, tol);
}

std::vector<ComplexVector> orthonormalize(std::span<const ComplexVector> vectors, double drop_tol) {
    std::vector<ComplexVector> basis;
    for (const auto &v : vectors) {
        ComplexVector r = v;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &b : basis) r = r - b * inner(b, r);
        }
        double n = r.norm();
        if (n > drop_tol) basis.push_back(r * Complex(1.0 / n));
    }
    return basis;
}

ComplexMatrix projector(std::span<const ComplexVector> orthonormal) {
    if (orthonormal.empty()) throw InvalidInput("projector: empty set");
    std::size_t n = orthonormal.front().dim();
    ComplexMatrix p = ComplexMatrix::zeros(n, n);
    for (const auto &v : orthonormal) p = p + ComplexMatrix::outer(v, v);
    return p;
}

}  // namespace ybsys

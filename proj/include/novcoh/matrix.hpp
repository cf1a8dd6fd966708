#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "novcoh/laurent.hpp"

namespace novcoh {

using Vector = std::vector<Scalar>;

template <class E>
inline constexpr bool is_laurent_v = std::is_same_v<E, LaurentPoly>;

/// Dense row-major matrix over a BaseRing (E = Scalar) or over R[z, z^-1]
/// (E = LaurentPoly).  A map R^m -> R^n is an n x m matrix acting on column vectors,
/// so g o f is g * f.
template <class E>
class Matrix {
public:
    Matrix(BaseRing ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, E::zero(ring)) {}

    static Matrix identity(BaseRing ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = E::one(ring);
        return m;
    }

    const BaseRing& ring() const { return ring_; }
    RingTag tag() const { return RingTag{ring_, is_laurent_v<E>}; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    E& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& e : entries_) {
            if (!e.is_zero()) return false;
        }
        return true;
    }

    /// Copies `m` into the block whose top-left corner is (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
        check_ring(m);
        if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DomainError("block does not fit");
        for (std::size_t i = 0; i < m.rows_; ++i) {
            for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
        }
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("block out of range");
        Matrix m(ring_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i) {
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        }
        return m;
    }

    Matrix transposed() const {
        Matrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        }
        return t;
    }

    Matrix operator-() const {
        Matrix r(*this);
        for (auto& e : r.entries_) e = -e;
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        check_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    Matrix scaled(const E& c) const {
        Matrix r(*this);
        for (auto& e : r.entries_) e = e * c;
        return r;
    }

    /// y = A x for a column vector x.
    std::vector<E> apply(std::span<const E> x) const {
        if (x.size() != cols_) throw DomainError("vector length does not match matrix columns");
        std::vector<E> y(rows_, E::zero(ring_));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
            }
        }
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    void check_ring(const Matrix& o) const {
        if (!(ring_ == o.ring_)) throw RingMismatch(ring_.name() + " vs " + o.ring_.name());
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void check_shape(const Matrix& o) const {
        check_ring(o);
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch " + shape() + " vs " + o.shape());
    }

    BaseRing ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<E> entries_;
};

using ScalarMatrix = Matrix<Scalar>;
using LaurentMatrix = Matrix<LaurentPoly>;

namespace serial {

/// Reference product, one thread.
template <class E>
Matrix<E> multiply(const Matrix<E>& a, const Matrix<E>& b) {
    a.check_ring(b);
    if (a.cols() != b.rows()) throw DomainError("cannot multiply " + a.shape() + " by " + b.shape());
    Matrix<E> c(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

}  // namespace serial

namespace parallel {

/// Row-parallel product; every output row is owned by one thread.
template <class E>
Matrix<E> multiply(const Matrix<E>& a, const Matrix<E>& b) {
    a.check_ring(b);
    if (a.cols() != b.rows()) throw DomainError("cannot multiply " + a.shape() + " by " + b.shape());
    Matrix<E> c(a.ring(), a.rows(), b.cols());
    const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t si = 0; si < rows; ++si) {
        const auto i = static_cast<std::size_t>(si);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

}  // namespace parallel

/// Work (rows * inner * cols) above which products go to the parallel kernel.
inline constexpr std::size_t kParallelMultiplyWork = 1u << 15;

template <class E>
Matrix<E> operator*(const Matrix<E>& a, const Matrix<E>& b) {
    if (a.rows() * a.cols() * b.cols() >= kParallelMultiplyWork) return parallel::multiply(a, b);
    return serial::multiply(a, b);
}

/// Constant Laurent matrix with the same entries.
LaurentMatrix to_laurent(const ScalarMatrix& m);
/// Entrywise canonical coefficient map (ZZ -> QQ, ZZ -> Fp).
ScalarMatrix map_base(const ScalarMatrix& m, BaseRing target);
LaurentMatrix map_base(const LaurentMatrix& m, BaseRing target);
/// Substitutes z = c in every entry.
ScalarMatrix evaluate(const LaurentMatrix& m, const Scalar& c);
/// Matrix of z^e coefficients.
ScalarMatrix coefficient(const LaurentMatrix& m, LaurentPoly::Exponent e);

ScalarMatrix integer_matrix(const std::vector<std::vector<long>>& rows, BaseRing ring = BaseRing::integers());

}  // namespace novcoh

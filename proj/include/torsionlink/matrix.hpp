#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "torsionlink/numeric.hpp"

namespace torsionlink {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // Small-literal builder for fixtures: IntMatrix::of({{3, 7}, {1, 2}}).
    static IntMatrix of(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator-() const {
        IntMatrix t(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) t.e_[k] = -e_[k];
        return t;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> e_;
};

// Dense row-major matrix of exact rationals (every entry reduced).
class RatMatrix {
public:
    RatMatrix() = default;

    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    explicit RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rational(m(i, j));
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> e_;
};

// Exact products; throw DimensionMismatch when inner dimensions differ.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }
inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return mat_mul(a, b); }

std::vector<BigInt> mat_apply(const IntMatrix& m, const std::vector<BigInt>& v);

// Exact determinant of a square integer matrix (fraction-free Bareiss).
BigInt det(const IntMatrix& m);

// Exact rational inverse; throws SingularMatrix when det = 0.
RatMatrix rat_inverse(const IntMatrix& m);

} // namespace torsionlink

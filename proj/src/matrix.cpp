#include "torsionlink/matrix.hpp"

#include <string>

namespace torsionlink {

IntMatrix IntMatrix::of(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
        }
    return p;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product: inner dimensions differ");
    RatMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
        }
    return p;
}

std::vector<BigInt> mat_apply(const IntMatrix& m, const std::vector<BigInt>& v) {
    if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector product");
    std::vector<BigInt> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

BigInt det(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("det of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;

    // Bareiss fraction-free elimination: all divisions are exact.
    IntMatrix w = m;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && w(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) swap(w(k, j), w(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = exact_div(w(i, j) * w(k, k) - w(i, k) * w(k, j), prev);
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : BigInt(-w(n - 1, n - 1));
}

RatMatrix rat_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix a(m);
    RatMatrix inv = RatMatrix::identity(n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw SingularMatrix("matrix has determinant 0");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                swap(a(col, j), a(piv, j));
                swap(inv(col, j), inv(piv, j));
            }
        Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace torsionlink

#include "torsionlink/snf.hpp"

namespace torsionlink {

namespace {

// Row operations mirror into U, column operations into V, so U*M*V = D holds
// throughout.
struct Worker {
    IntMatrix D, U, V;

    explicit Worker(const IntMatrix& m)
        : D(m), U(IntMatrix::identity(m.rows())), V(IntMatrix::identity(m.cols())) {}

    void row_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols(); ++j) swap(D(a, j), D(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) swap(U(a, j), U(b, j));
    }
    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows(); ++i) swap(D(i, a), D(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) swap(V(i, a), V(i, b));
    }
    // row[dst] += c * row[src]
    void row_add(std::size_t dst, std::size_t src, const BigInt& c) {
        for (std::size_t j = 0; j < D.cols(); ++j) D(dst, j) += c * D(src, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(dst, j) += c * U(src, j);
    }
    // col[dst] += c * col[src]
    void col_add(std::size_t dst, std::size_t src, const BigInt& c) {
        for (std::size_t i = 0; i < D.rows(); ++i) D(i, dst) += c * D(i, src);
        for (std::size_t i = 0; i < V.rows(); ++i) V(i, dst) += c * V(i, src);
    }
    void row_negate(std::size_t i) {
        for (std::size_t j = 0; j < D.cols(); ++j) D(i, j) = -D(i, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) = -U(i, j);
    }

    // Smallest |entry| != 0 in D[t.., t..]; false if that block is zero.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        BigInt best;
        for (std::size_t i = t; i < D.rows(); ++i)
            for (std::size_t j = t; j < D.cols(); ++j) {
                if (D(i, j) == 0) continue;
                BigInt a = abs(D(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    // Clear row t and column t beyond the diagonal, ending with a nonzero
    // pivot at (t,t). Caller guarantees the block D[t..,t..] is nonzero.
    void process_pivot(std::size_t t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            find_pivot(t, pi, pj);
            row_swap(t, pi);
            col_swap(t, pj);
            for (std::size_t i = t + 1; i < D.rows(); ++i)
                if (D(i, t) != 0) row_add(i, t, BigInt(-(D(i, t) / D(t, t))));
            for (std::size_t j = t + 1; j < D.cols(); ++j)
                if (D(t, j) != 0) col_add(j, t, BigInt(-(D(t, j) / D(t, t))));
            bool clear = true;
            for (std::size_t i = t + 1; i < D.rows() && clear; ++i)
                if (D(i, t) != 0) clear = false;
            for (std::size_t j = t + 1; j < D.cols() && clear; ++j)
                if (D(t, j) != 0) clear = false;
            if (clear) return;
            // Truncated division left remainders strictly smaller than the
            // pivot, so the loop makes progress.
        }
    }

    void diagonalize(std::size_t from) {
        std::size_t k = std::min(D.rows(), D.cols());
        for (std::size_t t = from; t < k; ++t) {
            std::size_t pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            process_pivot(t);
        }
        for (std::size_t t = from; t < k; ++t)
            if (D(t, t) < 0) row_negate(t);
    }
};

} // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    Worker w(m);
    w.diagonalize(0);

    std::size_t k = std::min(m.rows(), m.cols());
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (std::size_t t = 0; t < k && !dirty; ++t) {
            if (w.D(t, t) == 0) break;
            for (std::size_t j = t + 1; j < k; ++j) {
                if (w.D(j, j) == 0) break;
                if (w.D(j, j) % w.D(t, t) != 0) {
                    // Fold row j into row t, then redo the tail; the new
                    // pivot divides gcd(d_t, d_j).
                    w.row_add(t, j, BigInt(1));
                    w.diagonalize(t);
                    dirty = true;
                    break;
                }
            }
        }
    }
    return SNFResult{std::move(w.U), std::move(w.D), std::move(w.V)};
}

} // namespace torsionlink

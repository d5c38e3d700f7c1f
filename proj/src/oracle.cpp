#include "torsionlink/oracle.hpp"

#include <deque>
#include <set>

namespace torsionlink::oracle {

namespace {

// Self-contained exact solver: forward elimination to a triangular system,
// then back substitution per column.  Kept separate from the main library's
// Gauss-Jordan / Bareiss routines on purpose — the whole point of this
// module is an independent code path.  Returns false when m is singular;
// determinant is the pivot product.
bool gauss_solve(const IntMatrix& m, const RatMatrix& rhs0, RatMatrix& x, Rational& determinant) {
    std::size_t n = m.rows();
    RatMatrix a(m);
    RatMatrix rhs = rhs0;
    determinant = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) {
            determinant = 0;
            return false;
        }
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) swap(a(col, j), a(piv, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) swap(rhs(col, j), rhs(piv, j));
            determinant = -determinant;
        }
        determinant *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(col, j);
        }
    }
    x = RatMatrix(n, rhs0.cols());
    for (std::size_t j = 0; j < rhs0.cols(); ++j)
        for (std::size_t ii = n; ii-- > 0;) {
            Rational v = rhs(ii, j);
            for (std::size_t l = ii + 1; l < n; ++l) v -= a(ii, l) * x(l, j);
            x(ii, j) = v / a(ii, ii);
        }
    return true;
}

} // namespace

std::vector<std::vector<BigInt>> brute_cokernel(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("cokernel needs a square matrix");
    std::size_t n = m.rows();

    RatMatrix minv;
    Rational dq;
    if (!gauss_solve(m, RatMatrix::identity(n), minv, dq)) throw SingularMatrix("det = 0");
    if (dq.get_den() != 1) throw Error("internal: integer determinant came out fractional");
    BigInt count = abs(dq.get_num());
    if (count > 5000)
        throw TooLarge("cokernel has " + count.get_str() + " elements, oracle cap is 5000");

    // Breadth-first over +e_i steps from 0, canonicalizing each vector v to
    // v - m*floor(m^{-1} v).  The rational coordinates m^{-1} v ride along so
    // each step is a column add instead of a fresh solve.
    struct Node {
        std::vector<BigInt> rep;
        std::vector<Rational> coords;
    };
    std::set<std::vector<BigInt>> seen;
    std::deque<Node> work;
    work.push_back(Node{std::vector<BigInt>(n), std::vector<Rational>(n)});
    seen.insert(work.front().rep);
    while (!work.empty()) {
        Node v = std::move(work.front());
        work.pop_front();
        for (std::size_t step = 0; step < n; ++step) {
            Node w;
            w.coords.resize(n);
            for (std::size_t i = 0; i < n; ++i) w.coords[i] = v.coords[i] + minv(i, step);
            std::vector<BigInt> fl(n);
            for (std::size_t i = 0; i < n; ++i) {
                fl[i] = floor_rat(w.coords[i]);
                w.coords[i] -= Rational(fl[i]);
            }
            w.rep.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                w.rep[i] = v.rep[i];
                if (i == step) w.rep[i] += 1;
                for (std::size_t j = 0; j < n; ++j) w.rep[i] -= m(i, j) * fl[j];
            }
            if (seen.insert(w.rep).second) work.push_back(std::move(w));
        }
    }
    if (BigInt(static_cast<unsigned long>(seen.size())) != count)
        throw Error("internal: coset enumeration found " + std::to_string(seen.size()) +
                    " classes, expected " + count.get_str());
    return std::vector<std::vector<BigInt>>(seen.begin(), seen.end());
}

BruteLinkingTable brute_linking_form(const Gluing& g) {
    IntMatrix b = g.block_b();
    std::size_t n = g.genus();

    RatMatrix w;
    Rational dq;
    if (!gauss_solve(b, RatMatrix(g.block_a()), w, dq))
        throw NotRationalHomologySphere("det B = 0, not a rational homology sphere");
    BigInt dz = abs(dq.get_num());
    if (dz > 2000) throw TooLarge("|det B| = " + dz.get_str() + ", oracle table cap is 2000");

    BruteLinkingTable out;
    out.reps = brute_cokernel(b.transpose());
    std::size_t nreps = out.reps.size();

    // lambda(x,y) = -x^T (B^{-1}A) y; denominators divide det B, so scaling
    // by |det B| turns everything into integer dot products.
    IntMatrix wi(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = w(i, j) * Rational(dz);
            if (s.get_den() != 1) throw Error("internal: scaled linking matrix not integral");
            wi(i, j) = s.get_num();
        }
    std::vector<std::vector<BigInt>> wy(nreps, std::vector<BigInt>(n));
    for (std::size_t r = 0; r < nreps; ++r)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) wy[r][i] += wi(i, j) * out.reps[r][j];

    auto value_at = [&](const std::vector<BigInt>& x, std::size_t yi) {
        BigInt dot = 0;
        for (std::size_t l = 0; l < n; ++l) dot += x[l] * wy[yi][l];
        return QmodZ(-dot, dz);
    };

    out.table.assign(nreps, std::vector<QmodZ>(nreps));
    for (std::size_t xi = 0; xi < nreps; ++xi)
        for (std::size_t yi = 0; yi < nreps; ++yi) out.table[xi][yi] = value_at(out.reps[xi], yi);

    // Representative independence, spot-checked: adding B^T u to x must not
    // move any value.
    IntMatrix bt = b.transpose();
    std::vector<std::vector<BigInt>> shifts(2, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) shifts[0][i] = 1;
    shifts[1][0] = 1;
    std::size_t sample = nreps < 16 ? nreps : 16;
    for (const auto& u : shifts)
        for (std::size_t xi = 0; xi < sample; ++xi) {
            std::vector<BigInt> shifted = out.reps[xi];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) shifted[i] += bt(i, j) * u[j];
            for (std::size_t yi = 0; yi < sample; ++yi)
                if (value_at(shifted, yi) != out.table[xi][yi])
                    throw Error("internal: linking value moved under a representative shift");
        }
    return out;
}

bool brute_isometry(const LinkingForm& f1, const LinkingForm& f2) {
    if (f1.group.invariant_factors != f2.group.invariant_factors) return false;
    BigInt order = f1.group.order();
    if (order > 500) throw TooLarge("group order " + order.get_str() + " exceeds oracle cap 500");
    std::size_t k = f1.group.invariant_factors.size();
    if (k == 0) return true;

    // Everything fits in machine words at order <= 500.
    std::vector<unsigned long> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = f1.group.invariant_factors[i].get_ui();
    std::size_t nelem = static_cast<std::size_t>(order.get_ui());

    std::vector<std::vector<unsigned long>> elems;
    elems.reserve(nelem);
    {
        std::vector<unsigned long> x(k, 0);
        for (;;) {
            elems.push_back(x);
            std::size_t i = 0;
            while (i < k) {
                if (++x[i] < d[i]) break;
                x[i] = 0;
                ++i;
            }
            if (i == k) break;
        }
    }
    auto index_of = [&](const std::vector<unsigned long>& x) {
        std::size_t idx = 0;
        for (std::size_t i = k; i-- > 0;) idx = idx * d[i] + x[i];
        return idx;
    };

    auto table_of = [&](const LinkingForm& f) {
        std::vector<std::vector<QmodZ>> t(nelem, std::vector<QmodZ>(nelem));
        for (std::size_t xi = 0; xi < nelem; ++xi)
            for (std::size_t yi = 0; yi < nelem; ++yi) {
                QmodZ acc;
                for (std::size_t i = 0; i < k; ++i) {
                    if (elems[xi][i] == 0) continue;
                    for (std::size_t j = 0; j < k; ++j)
                        acc = acc + f.gram[i][j] * BigInt(elems[xi][i] * elems[yi][j]);
                }
                t[xi][yi] = acc;
            }
        return t;
    };
    std::vector<std::vector<QmodZ>> t1 = table_of(f1);
    std::vector<std::vector<QmodZ>> t2 = table_of(f2);

    // phi(e_j) = elems[img[j]]; a tuple is a homomorphism iff d_j kills each
    // image.  All tuples are visited — no pruning by form values.
    std::vector<std::size_t> img(k, 0);
    std::vector<std::size_t> phi(nelem);
    std::vector<char> hit(nelem);
    for (;;) {
        bool hom = true;
        for (std::size_t j = 0; j < k && hom; ++j)
            for (std::size_t i = 0; i < k && hom; ++i)
                if (d[j] * elems[img[j]][i] % d[i] != 0) hom = false;
        if (hom) {
            // build the full map and test bijectivity
            std::fill(hit.begin(), hit.end(), 0);
            bool bijective = true;
            for (std::size_t xi = 0; xi < nelem && bijective; ++xi) {
                std::vector<unsigned long> y(k, 0);
                for (std::size_t i = 0; i < k; ++i) {
                    unsigned long acc = 0;
                    for (std::size_t j = 0; j < k; ++j)
                        acc = (acc + elems[xi][j] * elems[img[j]][i]) % d[i];
                    y[i] = acc;
                }
                phi[xi] = index_of(y);
                if (hit[phi[xi]]) bijective = false;
                hit[phi[xi]] = 1;
            }
            if (bijective) {
                bool match = true;
                for (std::size_t xi = 0; xi < nelem && match; ++xi)
                    for (std::size_t yi = 0; yi < nelem && match; ++yi)
                        if (t2[phi[xi]][phi[yi]] != t1[xi][yi]) match = false;
                if (match) return true;
            }
        }
        std::size_t j = 0;
        while (j < k) {
            if (++img[j] < nelem) break;
            img[j] = 0;
            ++j;
        }
        if (j == k) return false;
    }
}

} // namespace torsionlink::oracle

#include "torsionlink/isometry.hpp"

#include <functional>

#include "torsionlink/snf.hpp"

namespace torsionlink {

namespace {

using Elem = std::vector<BigInt>;

// All of ⊕ Z/d_i as coordinate tuples, odometer order starting at 0.
std::vector<Elem> enumerate_elements(const std::vector<BigInt>& d) {
    std::vector<Elem> out;
    Elem x(d.size());
    for (;;) {
        out.push_back(x);
        std::size_t i = 0;
        while (i < d.size()) {
            x[i] += 1;
            if (x[i] < d[i]) break;
            x[i] = 0;
            ++i;
        }
        if (i == d.size()) return out;
    }
}

BigInt element_order(const Elem& x, const std::vector<BigInt>& d) {
    BigInt o = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
        o = big_lcm(o, exact_div(d[i], big_gcd(d[i], x[i])));
    return o;
}

QmodZ form_value(const std::vector<std::vector<QmodZ>>& gram, const Elem& x, const Elem& y) {
    QmodZ acc;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) acc = acc + gram[i][j] * (x[i] * y[j]);
    return acc;
}

// Columns of w generate ⊕ Z/d_i iff [w | diag(d)] has trivial cokernel.
bool generates_group(const IntMatrix& w, const std::vector<BigInt>& d) {
    std::size_t k = d.size();
    IntMatrix m(k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = w(i, j);
        m(i, k + i) = d[i];
    }
    SNFResult s = smith_normal_form(m);
    for (std::size_t t = 0; t < k; ++t)
        if (s.D(t, t) != 1) return false;
    return true;
}

// Backtracking over images of f2's SNF generators inside f1's group: the
// image of generator j must have order exactly d_j and reproduce f2's gram
// against every image already placed.  An injective hom between groups of
// equal order is an isomorphism, so the final check is only that the images
// generate.
std::optional<IntMatrix> search_isometry(const LinkingForm& f1, const LinkingForm& f2) {
    const std::vector<BigInt>& d = f1.group.invariant_factors;
    std::size_t k = d.size();
    std::vector<Elem> elems = enumerate_elements(d);
    std::vector<BigInt> orders;
    orders.reserve(elems.size());
    for (const Elem& e : elems) orders.push_back(element_order(e, d));

    std::vector<Elem> img(k);
    std::optional<IntMatrix> result;
    std::function<bool(std::size_t)> place = [&](std::size_t j) -> bool {
        if (j == k) {
            IntMatrix w(k, k);
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t i = 0; i < k; ++i) w(i, c) = img[c][i];
            if (!generates_group(w, d)) return false;
            result = std::move(w);
            return true;
        }
        for (std::size_t idx = 0; idx < elems.size(); ++idx) {
            if (orders[idx] != d[j]) continue;
            const Elem& y = elems[idx];
            if (form_value(f1.gram, y, y) != f2.gram[j][j]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i)
                if (form_value(f1.gram, img[i], y) != f2.gram[i][j]) ok = false;
            if (!ok) continue;
            img[j] = y;
            if (place(j + 1)) return true;
        }
        return false;
    };
    place(0);
    return result;
}

} // namespace

IsometryWitness isometric(const LinkingForm& f1, const LinkingForm& f2,
                          const IsometryOptions& options) {
    if (f1.group.invariant_factors != f2.group.invariant_factors) return {};
    const std::vector<BigInt>& d = f1.group.invariant_factors;
    std::size_t k = d.size();
    if (k == 0) return IsometryWitness{IntMatrix(0, 0)};

    if (!options.force_enumeration) {
        if (f1.gram == f2.gram) return IsometryWitness{IntMatrix::identity(k)};
        if (k == 1) {
            // Cyclic: u^2 g1 = g2 over units u mod d.
            const BigInt& n = d[0];
            for (BigInt u = 1; u < n; ++u) {
                if (big_gcd(u, n) != 1) continue;
                if (f1.gram[0][0] * (u * u) == f2.gram[0][0]) {
                    IntMatrix w(1, 1);
                    w(0, 0) = u;
                    return IsometryWitness{std::move(w)};
                }
            }
            return {};
        }
    }

    BigInt order = f1.group.order();
    if (order > options.cap)
        throw SearchCapExceeded("group order " + order.get_str() +
                                " exceeds the isometry search cap " + options.cap.get_str());
    std::optional<IntMatrix> w = search_isometry(f1, f2);
    return IsometryWitness{std::move(w)};
}

bool lens_homotopy_equivalent(const BigInt& p, const BigInt& q1, const BigInt& q2) {
    if (p <= 0 || q1 <= 0 || q2 <= 0) throw DomainError("p, q1, q2 must be positive");
    if (big_gcd(p, q1) != 1 || big_gcd(p, q2) != 1)
        throw NotCoprime("q1 and q2 must be coprime to p");
    LinkingForm f1 = linking_form(lens_gluing(p, q1));
    LinkingForm f2 = linking_form(lens_gluing(p, q2));
    return isometric(f1, f2).found();
}

} // namespace torsionlink

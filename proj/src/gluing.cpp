#include "torsionlink/gluing.hpp"

#include <string>

namespace torsionlink {

IntMatrix Gluing::block(std::size_t r0, std::size_t c0) const {
    IntMatrix b(genus_, genus_);
    for (std::size_t i = 0; i < genus_; ++i)
        for (std::size_t j = 0; j < genus_; ++j) b(i, j) = r_(r0 + i, c0 + j);
    return b;
}

IntMatrix symplectic_form(std::size_t genus) {
    IntMatrix j(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        j(i, genus + i) = 1;
        j(genus + i, i) = -1;
    }
    return j;
}

Gluing validate_gluing(const IntMatrix& m) {
    if (!m.is_square())
        throw DimensionMismatch("gluing matrix must be square, got " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()));
    if (m.rows() % 2 != 0)
        throw OddDimension("gluing matrix must be 2g x 2g, got dimension " +
                           std::to_string(m.rows()));
    if (m.rows() == 0) throw DomainError("genus must be positive");

    IntMatrix j = symplectic_form(m.rows() / 2);
    IntMatrix rjr = m.transpose() * j * m;
    if (rjr == -j) return Gluing(m);
    if (rjr == j)
        throw NotAntiSymplectic(
            "matrix is symplectic (R^T J R = +J); an orientation-reversing "
            "gluing must satisfy R^T J R = -J");
    throw NotAntiSymplectic("R^T J R = -J fails");
}

Gluing lens_gluing(const LensParams& params) {
    const BigInt& p = params.p;
    const BigInt& q = params.q;
    if (p <= 0 || q <= 0) throw DomainError("p and q must be positive");
    if (big_gcd(p, q) != 1) throw NotCoprime("p and q must be coprime");

    // r == -q^{-1} (mod p) makes qr + 1 divisible by p; picking the
    // representative in [0, p) pins the Bezout pair.
    BigInt qinv = p == 1 ? BigInt(0) : *mod_inverse(q, p);
    BigInt r = (p - qinv) % p;
    BigInt s = exact_div(q * r + 1, p);

    IntMatrix m(2, 2);
    m(0, 0) = q;
    m(0, 1) = p;
    m(1, 0) = s;
    m(1, 1) = r;
    return validate_gluing(m);
}

Gluing lens_gluing(const BigInt& p, const BigInt& q) { return lens_gluing(LensParams{p, q}); }

Gluing compose_gluings(const Gluing& g1, const IntMatrix& s) {
    if (!s.is_square() || s.rows() != 2 * g1.genus())
        throw DimensionMismatch("symplectic factor must be 2g x 2g for g = " +
                                std::to_string(g1.genus()));
    IntMatrix j = symplectic_form(g1.genus());
    if (s.transpose() * j * s != j) throw NotSymplectic("S^T J S = +J fails");
    return validate_gluing(g1.matrix() * s);
}

Gluing block_sum(const Gluing& g1, const Gluing& g2) {
    std::size_t n1 = g1.genus();
    std::size_t g = n1 + g2.genus();
    IntMatrix r(2 * g, 2 * g);
    auto put = [&](const IntMatrix& x, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) r(r0 + i, c0 + j) = x(i, j);
    };
    put(g1.block_a(), 0, 0);
    put(g2.block_a(), n1, n1);
    put(g1.block_b(), 0, g);
    put(g2.block_b(), n1, g + n1);
    put(g1.block_c(), g, 0);
    put(g2.block_c(), g + n1, n1);
    put(g1.block_d(), g, g);
    put(g2.block_d(), g + n1, g + n1);
    return validate_gluing(r);
}

IntMatrix transvection(const std::vector<BigInt>& v, std::size_t genus) {
    std::size_t n = 2 * genus;
    if (v.size() != n) throw DimensionMismatch("transvection vector must have length 2g");
    // w = v^T J, so T = I - v w acts as x -> x + <x,v> v.
    std::vector<BigInt> w(n);
    for (std::size_t j = 0; j < genus; ++j) {
        w[j] = -v[genus + j];
        w[genus + j] = v[j];
    }
    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) -= v[i] * w[j];
    return t;
}

Gluing random_gluing(std::size_t genus, std::size_t num_twists, std::uint64_t seed) {
    if (genus < 1) throw DomainError("genus must be positive");
    IntMatrix swap_m(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        swap_m(i, genus + i) = 1;
        swap_m(genus + i, i) = 1;
    }
    Gluing g = validate_gluing(swap_m);

    // Alphabet: a_1..a_g, b_1..b_g, then a_i + b_j in i-major order.
    std::uint64_t state = seed;
    std::uint64_t nalpha = 2 * genus + genus * genus;
    for (std::size_t t = 0; t < num_twists; ++t) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        std::size_t idx = static_cast<std::size_t>((state >> 32) % nalpha);
        std::vector<BigInt> v(2 * genus);
        if (idx < 2 * genus) {
            v[idx] = 1;
        } else {
            std::size_t pair = idx - 2 * genus;
            v[pair / genus] = 1;
            v[genus + pair % genus] = 1;
        }
        g = compose_gluings(g, transvection(v, genus));
    }
    return g;
}

} // namespace torsionlink

#pragma once

#include <cstdint>

#include "torsionlink/matrix.hpp"

namespace torsionlink {

// 2g x 2g integer matrix R = (A B; C D) of an orientation-reversing surface
// diffeomorphism acting on H_1 of the genus-g surface, in a symplectic basis
// a_1..a_g, b_1..b_g.  Validity means R^T J R = -J for J = (0 I; -I 0); this
// implies A B^T = B A^T.  Instances exist only via validate_gluing, so every
// Gluing in the program satisfies the relation exactly.
class Gluing {
public:
    std::size_t genus() const { return genus_; }
    const IntMatrix& matrix() const { return r_; }

    IntMatrix block_a() const { return block(0, 0); }
    IntMatrix block_b() const { return block(0, genus_); }
    IntMatrix block_c() const { return block(genus_, 0); }
    IntMatrix block_d() const { return block(genus_, genus_); }

    bool operator==(const Gluing& o) const { return r_ == o.r_; }

    friend Gluing validate_gluing(const IntMatrix& m);

private:
    explicit Gluing(IntMatrix r) : r_(std::move(r)), genus_(r_.rows() / 2) {}
    IntMatrix block(std::size_t r0, std::size_t c0) const;

    IntMatrix r_;
    std::size_t genus_;
};

struct LensParams {
    BigInt p;
    BigInt q;
};

// Standard symplectic form J = (0 I_g; -I_g 0) on Z^2g.
IntMatrix symplectic_form(std::size_t genus);

// Checks the anti-symplectic relation R^T J R = -J and wraps the matrix.
// Throws OddDimension / DimensionMismatch on shape, NotAntiSymplectic
// otherwise (with a pointer to the symplectic case when R^T J R = +J).
Gluing validate_gluing(const IntMatrix& m);

// Genus-1 gluing (q p; s r) with qr - ps = -1 for the lens space L(p,q).
// (r, s) is pinned to r = (p - q^{-1}) mod p, s = (qr+1)/p, the minimal
// nonnegative Bezout solution (0 <= s < q for q > 1, s = 1 for q = 1).
Gluing lens_gluing(const LensParams& params);
Gluing lens_gluing(const BigInt& p, const BigInt& q);

// R1 * S for a symplectic S (S^T J S = +J); the product is anti-symplectic
// again and is re-validated.
Gluing compose_gluings(const Gluing& g1, const IntMatrix& s);

// Genus g1+g2 gluing with A = A1 (+) A2 and likewise for B, C, D.
Gluing block_sum(const Gluing& g1, const Gluing& g2);

// Deterministic pseudo-random gluing: starts from the swap (0 I; I 0) and
// right-composes num_twists symplectic transvections x -> x + <x,v>v with v
// drawn from a_i, b_i, a_i + b_j by a fixed 64-bit LCG.  Pure function of
// its arguments.
Gluing random_gluing(std::size_t genus, std::size_t num_twists, std::uint64_t seed);

// The transvection matrix I - v v^T J (symplectic for any integer vector v).
IntMatrix transvection(const std::vector<BigInt>& v, std::size_t genus);

} // namespace torsionlink

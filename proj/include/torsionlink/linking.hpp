#pragma once

#include "torsionlink/gluing.hpp"
#include "torsionlink/matrix.hpp"
#include "torsionlink/numeric.hpp"

namespace torsionlink {

// Invariant factors d_1 | d_2 | ... | d_k, all >= 2; empty means trivial.
struct FiniteAbelianGroup {
    std::vector<BigInt> invariant_factors;

    bool is_trivial() const { return invariant_factors.empty(); }
    BigInt order() const;
    bool operator==(const FiniteAbelianGroup&) const = default;
};

// Cokernel of B^T with the change of basis that diagonalizes it.
// generator_map is the unimodular U with U * B^T * V = D; the SNF
// coordinates of a class [x] are (U x) mod (d_1, ..., d_g).  Columns of
// U^{-1} at the indices with d > 1 are the a-coordinates of the group's
// generators.  free_rank counts zero diagonal entries (nonzero exactly for
// non-QHS gluings).
struct HomologyPresentation {
    FiniteAbelianGroup group;
    std::size_t free_rank = 0;
    IntMatrix generator_map;
    IntMatrix presentation;
};

// Torsion linking form on SNF generators: gram[i][j] = lambda(g_i, g_j) in
// Q/Z, a k x k symmetric matrix for k = #invariant factors.
struct LinkingForm {
    FiniteAbelianGroup group;
    std::vector<std::vector<QmodZ>> gram;

    bool operator==(const LinkingForm&) const = default;
};

HomologyPresentation homology(const Gluing& g);

// det B != 0
bool is_rational_homology_sphere(const Gluing& g);

// Lambda = -B^{-1} A, the form on the a-generators of Z^g / B^T Z^g.
// Throws NotRationalHomologySphere when det B = 0.
RatMatrix linking_matrix(const Gluing& g);

// The form restricted to SNF generators; order-1 factors are dropped.
// Asserts symmetry of -B^{-1}A exactly.  Throws NotRationalHomologySphere.
LinkingForm linking_form(const Gluing& g);

// v^T gram w in Q/Z for coefficient vectors of length k.
QmodZ evaluate(const LinkingForm& form, const std::vector<BigInt>& v,
               const std::vector<BigInt>& w);

// SNF coordinates (one per invariant factor, reduced into [0, d_i)) of the
// class of an a-coordinate vector x — the bridge between the presentation's
// generators and the normalized group.
std::vector<BigInt> snf_coordinates(const HomologyPresentation& hp,
                                    const std::vector<BigInt>& x);

} // namespace torsionlink

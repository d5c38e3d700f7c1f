#pragma once

#include "torsionlink/gluing.hpp"
#include "torsionlink/linking.hpp"

// Brute-force reference implementations for cross-checking the main
// pipeline on small instances.  Deliberately shares no algorithmic code
// with the other modules beyond the BigInt/Rational/QmodZ primitives: the
// linear algebra here is a self-contained Gaussian elimination, and group
// elements are enumerated explicitly instead of going through SNF.
namespace torsionlink::oracle {

// Coset representatives of Z^g / m Z^g, found by breadth-first search from 0
// with unit steps, canonicalizing each vector v to v - m * floor(m^{-1} v).
// Requires det m != 0 and |det m| <= 5000 (TooLarge / SingularMatrix).
std::vector<std::vector<BigInt>> brute_cokernel(const IntMatrix& m);

// lambda(x, y) for all pairs of coset representatives, straight from the
// defining formula -x^T B^{-1} A y without SNF normalization.  reps[i] is
// the representative behind row/column i of table.  Requires |det B| <=
// 2000.  Construction re-derives a sample of values from shifted
// representatives and refuses to return if any disagree.
struct BruteLinkingTable {
    std::vector<std::vector<BigInt>> reps;
    std::vector<std::vector<QmodZ>> table;
};
BruteLinkingTable brute_linking_form(const Gluing& g);

// Exhaustive isometry decision: tries every bijective homomorphism between
// the groups (no pruning) and compares full value tables.  Requires group
// order <= 500 (TooLarge).
bool brute_isometry(const LinkingForm& f1, const LinkingForm& f2);

} // namespace torsionlink::oracle

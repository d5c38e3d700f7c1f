#pragma once

#include <optional>

#include "torsionlink/linking.hpp"

namespace torsionlink {

// Witness for isometry of two forms, or "none".  When present, W is a k x k
// integer matrix whose column j is the image of the j-th SNF generator of
// f2's group inside f1's group, and W^T G1 W = G2 entrywise in Q/Z; W
// induces a group isomorphism.
struct IsometryWitness {
    std::optional<IntMatrix> matrix;

    bool found() const { return matrix.has_value(); }
};

struct IsometryOptions {
    // Largest group order the backtracking search will attempt.
    BigInt cap = 5000;
    // Skip the cyclic unit-square shortcut (test hook; the cap then applies
    // to cyclic groups too).
    bool force_enumeration = false;
};

// Decides isometry.  Different invariant factors give "none" outright;
// cyclic groups use the unit-square criterion u^2 g1 = g2 (mod 1); otherwise
// a backtracking search over generator images, pruned by element order and
// partial form values.  Throws SearchCapExceeded when the group order
// exceeds options.cap and no fast path applies.
IsometryWitness isometric(const LinkingForm& f1, const LinkingForm& f2,
                          const IsometryOptions& options = {});

// Whether L(p,q1) and L(p,q2) have isometric linking forms — by the
// classical theorem, whether they are homotopy equivalent.  Throws
// NotCoprime.
bool lens_homotopy_equivalent(const BigInt& p, const BigInt& q1, const BigInt& q2);

} // namespace torsionlink

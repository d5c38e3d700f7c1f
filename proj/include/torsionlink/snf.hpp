#pragma once

#include "torsionlink/matrix.hpp"

namespace torsionlink {

// U * input * V = D with U, V unimodular and D the canonical Smith form:
// diagonal, nonnegative, each entry dividing the next, zeros last. Only D
// is canonical; U and V depend on pivot choices.
struct SNFResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

SNFResult smith_normal_form(const IntMatrix& m);

} // namespace torsionlink

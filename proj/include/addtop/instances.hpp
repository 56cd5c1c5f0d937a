#pragma once

#include "addtop/lincat.hpp"

namespace addtop {

// Bundled example categories used by the verification suites and tests.

// F_2 x F_2 as F_2[x]/(x^2-x), basis {e1, e2} (orthogonal idempotents).
CatPtr makeF2xF2();
// F_2[x]/(x^k), basis {1, x, ..., x^{k-1}}; k = 1 gives F_2 itself.
CatPtr makeTruncPoly(std::size_t k);
// Path category of the A2 quiver v1 -> v2 over F_2.
CatPtr makeA2();
// tensorCategory(makeF2xF2(), makeTruncPoly(2)): one object, hom dim 4.
CatPtr makeKelly();
// Path category of v0 -c-> v1 -a-> v2 with a∘c = 0, over F_2.
CatPtr makeA3();
// makeF2xF2 with the symmetric monoidal structure given by the algebra
// multiplication: * ⊗ * = *, f ⊗ g = f·g, unit object *.
CatPtr makeF2xF2Monoidal();

} // namespace addtop

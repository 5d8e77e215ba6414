#pragma once

// The small named algebras used across the suites.
//   T1: one element.  B2: two-element chain.
//   G3: three-element idempotent chain (0 < a < 1, a*a = a).
//   L3: three-element chain with a*a = 0 and a->0 = a.
//   B4: B2 x B2, atoms at indices 1 and 2.

#include "hoops/cones.hpp"
#include "hoops/finite_hoop.hpp"

namespace hoops::testing {

inline FiniteHoop t1() { return make_chain(ChainKind::godel, 1); }
inline FiniteHoop b2() { return make_chain(ChainKind::godel, 2); }
inline FiniteHoop g3() { return make_chain(ChainKind::godel, 3); }
inline FiniteHoop l3() { return make_chain(ChainKind::lukasiewicz, 3); }
inline FiniteHoop b4() { return direct_product(b2(), b2()); }

}  // namespace hoops::testing

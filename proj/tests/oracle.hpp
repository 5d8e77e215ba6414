#pragma once

// Brute-force reference enumeration, independent of the order-first
// search in the library: walk every monoid table with the unit at index
// size-1 (associativity pruned cell by cell), recover the order from
// divisibility on both sides, and keep the tables the full validator
// accepts.  Slower but with no shared search logic; its counts anchor
// the enumerator's regression constants.

#include <vector>

#include "hoops/finite_hoop.hpp"

namespace hoops::testing {

std::vector<FiniteHoop> brute_force_hoops(int size);

struct BruteCounts {
  long long labeled = 0;
  long long iso_classes = 0;
};

BruteCounts brute_force_counts(int size);

}  // namespace hoops::testing

#pragma once

// Exhaustive generation of the finite pseudo hoops of a given size.
//
// Search plan: enumerate the meet-semilattice partial orders with top
// at index size-1, then fill the product table cell by cell under
//  - unit laws,
//  - x*y below the meet of x and y,
//  - monotonicity against every comparable filled cell,
//  - associativity on fully determined triples,
// and finally derive the arrows by residual scan and run the full
// validator.  Emission is sorted by canonical key so the order is
// deterministic regardless of how the search tree was walked.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hoops/finite_hoop.hpp"

namespace hoops {

struct EnumRestrict {
  bool bounded = false;
  bool commutative = false;
  bool cancellative = false;
  bool prelinear = false;
  bool basic = false;
  bool good = false;
  bool eq64 = false;
  bool pseudo_bl = false;
  bool lattice = false;

  bool admits(ClassFlags const& f) const;
};

struct EnumOptions {
  int size = 1;
  bool up_to_iso = true;
  EnumRestrict restrict;
  std::optional<long long> limit;
};

// Lexicographically minimal serialization of the tables over all
// relabelings that put the unit at index size-1; equal keys iff the
// algebras are isomorphic.
using CanonicalKey = std::string;

CanonicalKey canonical_form(FiniteHoop const& A);
std::string canonical_key_hash(CanonicalKey const& key);  // short hex, for filenames

// Backtracking over unit-preserving bijections that match order profile
// and idempotence; independent of canonical_form.
bool are_isomorphic(FiniteHoop const& A, FiniteHoop const& B);

// All pseudo hoops of the requested size (unit fixed at index size-1),
// one per isomorphism class when up_to_iso, in canonical-key order.
std::vector<FiniteHoop> enumerate_hoops(EnumOptions const& opts);

// Apply a relabeling: element x of A becomes perm[x].
FiniteHoop relabel(FiniteHoop const& A, std::vector<Elem> const& perm);

}  // namespace hoops

#pragma once

// Filter theory of a finite pseudo hoop: generation, the filter lattice,
// normality, primality, values and covers, quotients and class structures.

#include <optional>
#include <vector>

#include "hoops/finite_hoop.hpp"

namespace hoops {

// A filter is an upward-closed submonoid containing the unit, stored as
// an element bit-set.  Orderings on filters (and hence all "first value"
// choices) use the bit-set value, which is deterministic.
struct Filter {
  Mask elements = 0;

  bool contains(Elem x) const { return mask_has(elements, x); }
  int count() const;
  friend auto operator<=>(Filter const&, Filter const&) = default;
};

bool is_filter(FiniteHoop const& M, Mask elements);

// Least filter containing S; for a singleton {a} this is
// {x : x >= a^n for some 1 <= n <= nmax} with nmax = |M|.
Filter generated_filter(FiniteHoop const& M, Mask seed);

// Every filter, ordered by bit-set value.  Computed as the closure of
// {1} under single-element extensions (every filter is reached because
// adding any missing element grows the closure strictly).
std::vector<Filter> all_filters(FiniteHoop const& M);

struct FilterLatticeReport {
  std::vector<Filter> filters;
  // join/meet tables as indices into `filters`
  std::vector<std::vector<int>> join_of, meet_of;
  bool distributive = true;
  std::array<int, 3> distributivity_witness{-1, -1, -1};
  // F /\ \/_i F_i = \/_i (F /\ F_i) over all families of filters
  bool family_law = true;
  long long families_checked = 0;
  std::optional<std::pair<int, Mask>> family_witness;  // (F index, family bit-set)
};

// Meet is intersection, join is the generated filter of the union.  The
// family law is exhausted over all subsets of the filter list when there
// are at most 16 filters, and over all families of size <= 3 otherwise
// (binary distributivity then implies the general law by induction).
FilterLatticeReport filter_lattice(FiniteHoop const& M);

// Normality, checked through both characterizations: a*F = F*a for all
// a, and x->y in F iff x~>y in F.  The two must agree; a disagreement
// is a FatalInconsistency (it cannot happen for a validated algebra).
bool is_normal_filter(FiniteHoop const& M, Filter const& F);

struct QuotientResult {
  FiniteHoop algebra;
  std::vector<Elem> projection;  // element of M -> element of the quotient
};

// Quotient by a normal filter; ContractError if F is not normal.
QuotientResult quotient(FiniteHoop const& M, Filter const& F);

enum class Side { right, left };

// Right classes: x ~ y iff x->y, y->x in F, ordered by Fa <= Fb iff
// a->b in F.  Left classes use ~> and aF <= bF iff a*f <= b for some
// f in F.  Well-definedness and the product characterization
// (Fa <= Fb iff x*a <= b for some x in F) are asserted on every call.
struct QuotientStructure {
  Side side = Side::right;
  std::vector<Mask> classes;    // blocks, in order of least element
  std::vector<int> class_of;    // element -> class id
  std::vector<Mask> order_up;   // class id -> mask of classes above it
  bool total = false;

  bool cls_leq(int c1, int c2) const { return mask_has(order_up[size_t(c1)], c2); }
  bool cls_lt(int c1, int c2) const { return c1 != c2 && cls_leq(c1, c2); }
};

QuotientStructure class_structure(FiniteHoop const& M, Filter const& F, Side side);

// The nine primality conditions for a proper filter.  Conditions that
// mention joins are inapplicable when some needed join is missing (never
// the case for finite algebras, which are lattices).
struct PrimeReport {
  enum class Tri { yes, no, inapplicable };
  struct Entry {
    char const* label;  // "i", "ii", "iii", "iii'", "iv", "v", "vi", "vii", "viii"
    Tri result;
    Elem wx = -1, wy = -1;  // witness pair for `no`, when meaningful
  };
  std::array<Entry, 9> conditions{};
  bool agree = true;  // all applicable results equal

  bool all_yes() const;
};

// Prop-4.3-style report; ContractError if F is improper (the whole
// algebra).  For basic M the conditions must agree; the non-basic case
// is reported without any agreement requirement.
PrimeReport prime_tests(FiniteHoop const& M, Filter const& F,
                        std::vector<Filter> const* filters = nullptr);

// Primality proper is condition (i): F1 /\ F2 <= F forces F1 <= F or
// F2 <= F.  Defined for proper filters only.
bool is_prime(FiniteHoop const& M, Filter const& F,
              std::vector<Filter> const* filters = nullptr);

// A value of g < 1: a filter maximal among those omitting g; its cover
// is the filter generated by the value and g.
struct ValueRecord {
  Elem g = -1;
  Filter value;
  Filter cover;
};

// All values of g in bit-set order; ContractError when g = 1.  For
// basic M every value is asserted prime.
std::vector<ValueRecord> values_of(FiniteHoop const& M, Elem g,
                                   std::vector<Filter> const* filters = nullptr);

std::vector<Filter> minimal_primes(FiniteHoop const& M,
                                   std::vector<Filter> const* filters = nullptr);
std::vector<Filter> maximal_filters(FiniteHoop const& M,
                                    std::vector<Filter> const* filters = nullptr);

// u is a strong unit iff the filter it generates is all of M.
bool has_strong_unit(FiniteHoop const& M, Elem u);

// X^perp = {x : x \/ a = 1 for all a in X}; the result is asserted to be
// a filter.  Inapplicable for non-basic M (the underlying lemma's
// hypothesis), although finite joins always exist.
Filter perp(FiniteHoop const& M, Mask X);

// A prime filter containing F and disjoint from the nonempty lattice
// ideal A (downward closed, join closed), computed by greedy
// maximalization in element order.  The result is asserted prime.
Filter prime_extension(FiniteHoop const& M, Filter const& F, Mask A);

bool is_lattice_ideal(FiniteHoop const& M, Mask A);

}  // namespace hoops

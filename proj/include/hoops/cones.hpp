#pragma once

// Constructions: Lukasiewicz and Godel chains, direct products, ordinal
// sums, and symbolic negative cones of Z^k (pointwise or lexicographic
// order) with a seeded property sampler for the infinite models.

#include <cstdint>
#include <string>
#include <vector>

#include "hoops/finite_hoop.hpp"

namespace hoops {

enum class ChainKind { lukasiewicz, godel };

// n-element chain 0 < 1 < ... < n-1 with unit n-1.
//  - lukasiewicz: x*y = max(x+y-(n-1), 0), arrows truncated differences
//    (the integer interval [-(n-1), 0] under addition, cut at the bottom)
//  - godel: x*y = min(x,y), x->y = 1 if x <= y else y
FiniteHoop make_chain(ChainKind kind, int n);

// Componentwise product; element (a, b) has index a*size(B) + b.
FiniteHoop direct_product(FiniteHoop const& A, FiniteHoop const& B);

// Stacks M0 below M1 with a shared top: carrier is
// (M0 minus unit) + (M1 minus unit) + {1}, every M0-element below every
// M1-element, products across components taking the lower element, and
// arrows 1 when x <= y, else the lower element y.
FiniteHoop ordinal_sum(FiniteHoop const& M0, FiniteHoop const& M1);

// --- symbolic negative cones of Z^k -------------------------------------

enum class ConeOrder { pointwise, lex };

struct ConeModel {
  int dim = 1;
  ConeOrder order = ConeOrder::pointwise;
};

// An element of the negative cone: coordinates summing under the group
// operation, constrained to be <= 0 in the model's order.
using ConeElem = std::vector<long long>;

bool cone_contains(ConeModel const& m, ConeElem const& x);
bool cone_leq(ConeModel const& m, ConeElem const& x, ConeElem const& y);

ConeElem cone_prod(ConeModel const& m, ConeElem const& x, ConeElem const& y);
// Both residuals coincide (the group is abelian): (y - x) /\ 0.
ConeElem cone_imp(ConeModel const& m, ConeElem const& x, ConeElem const& y);
ConeElem cone_meet(ConeModel const& m, ConeElem const& x, ConeElem const& y);
ConeElem cone_join(ConeModel const& m, ConeElem const& x, ConeElem const& y);

struct ConeOps {
  ConeElem prod, rimp, limp, meet;
};
ConeOps cone_ops(ConeModel const& m, ConeElem const& x, ConeElem const& y);

// Properties checkable by sampling cone elements.
enum class SampleProperty {
  eq61,         // x^2 * y^2 <= y * x
  thm66ii,      // ((x->y)^n ~> y)^2 <= (x~>y)^{2n} -> y, n = 1..8
  thm66iii,     // the arrow-swapped twin
  eq63,         // inapplicable: cones are unbounded, there is no 0
  eq64,         // (x->y)~>y = (x~>y)->y
  prop31,       // z*(x/\y) = (z*x)/\(z*y) and the right-hand twin
  prelinearity, // (x->y) \/ (y->x) = e, both arrows
  residuation,  // z*x <= y iff z <= x->y
};

char const* sample_property_name(SampleProperty p);
std::optional<SampleProperty> parse_sample_property(std::string const& s);

struct SampleReport {
  SampleProperty property;
  long long trials = 0;
  long long passes = 0;
  bool inapplicable = false;           // eq63 on an unbounded cone
  bool fatal = false;                  // counterexample: implementation bug
  std::vector<ConeElem> counterexample;  // the offending tuple, if any
};

// Deterministic sampler: trial t draws from a 64-bit LCG seeded with
// seed + t * 0x9E3779B97F4A7C15 (state update s = s*6364136223846793005
// + 1442695040888963407, top 32 bits used), coordinates uniform in
// [-box, 0], rejected if outside the cone.  The seed-to-sample mapping
// is part of the interface and must stay stable.
SampleReport sample_check(ConeModel const& m, SampleProperty property,
                          long long trials, long long box, std::uint64_t seed);

}  // namespace hoops

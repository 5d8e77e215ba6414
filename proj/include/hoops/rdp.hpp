#pragma once

// Riesz decomposition: whenever b*c <= a the pair
//   b' = ((c->a)~>a)->a,   c' = (c->a)~>a
// satisfies b <= b', c <= c' and b'*c' = a.  The construction is used
// verbatim; verify_rdp exhausts it over the whole algebra.

#include <optional>

#include "hoops/finite_hoop.hpp"

namespace hoops {

struct RdpWitness {
  Elem a = -1, b = -1, c = -1;
  Elem b_prime = -1, c_prime = -1;
};

// ContractError unless b*c <= a; FatalInconsistency if the computed
// witness violates its invariants (impossible for a validated algebra).
RdpWitness rdp_witness(FiniteHoop const& M, Elem a, Elem b, Elem c);

struct RdpReport {
  bool pass = true;
  long long checked = 0;     // triples with b*c <= a
  long long nontrivial = 0;  // those with a < 1
  std::optional<RdpWitness> failure;
};

RdpReport verify_rdp(FiniteHoop const& M);

// Filter-product laws: with A*B the elementwise product set,
//   (ii)  F(a)*F(b) = F(a*b) = F(b*a) = F(b)*F(a) for all pairs,
//   (iii) F*G = F join G = G*F for all filter pairs.
// (ii) is implied when x^2*y^2 <= y*x holds; (ii) and (iii) are
// equivalent unconditionally.
struct FilterProductReport {
  bool cond61 = false;     // does x^2*y^2 <= y*x hold?
  bool ii_holds = true;
  bool iii_holds = true;
  bool implication_ok = true;  // cond61 -> ii
  bool equivalence_ok = true;  // ii <-> iii
  Elem ii_wx = -1, ii_wy = -1;
  Mask iii_wf = 0, iii_wg = 0;
};

FilterProductReport check_filter_products(FiniteHoop const& M);

}  // namespace hoops

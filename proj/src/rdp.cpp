#include "hoops/rdp.hpp"

#include "hoops/filters.hpp"
#include "hoops/normal_valued.hpp"

namespace hoops {

RdpWitness rdp_witness(FiniteHoop const& M, Elem a, Elem b, Elem c) {
  if (!M.leq(M.prod(b, c), a)) throw ContractError("rdp_witness: b*c <= a required");
  Elem c_prime = M.limp(M.rimp(c, a), a);
  Elem b_prime = M.rimp(c_prime, a);
  RdpWitness w{a, b, c, b_prime, c_prime};
  if (!M.leq(b, b_prime) || !M.leq(c, c_prime) || M.prod(b_prime, c_prime) != a)
    throw FatalInconsistency("rdp witness invariants failed");
  return w;
}

RdpReport verify_rdp(FiniteHoop const& M) {
  RdpReport rep;
  for (Elem a = 0; a < M.size(); ++a)
    for (Elem b = 0; b < M.size(); ++b)
      for (Elem c = 0; c < M.size(); ++c) {
        if (!M.leq(M.prod(b, c), a)) continue;
        ++rep.checked;
        if (a != M.unit()) ++rep.nontrivial;
        try {
          rdp_witness(M, a, b, c);
        } catch (FatalInconsistency const&) {
          rep.pass = false;
          Elem cp = M.limp(M.rimp(c, a), a);
          rep.failure = RdpWitness{a, b, c, M.rimp(cp, a), cp};
          return rep;
        }
      }
  return rep;
}

FilterProductReport check_filter_products(FiniteHoop const& M) {
  FilterProductReport rep;
  rep.cond61 = check_61(M).holds;

  auto fgen = [&](Elem a) { return generated_filter(M, bit_of(a)).elements; };
  auto set_prod = [&](Mask A, Mask B) {
    Mask out = 0;
    for (Elem x = 0; x < M.size(); ++x)
      if (mask_has(A, x))
        for (Elem y = 0; y < M.size(); ++y)
          if (mask_has(B, y)) out |= bit_of(M.prod(x, y));
    return out;
  };

  for (Elem a = 0; a < M.size() && rep.ii_holds; ++a)
    for (Elem b = 0; b < M.size(); ++b) {
      Mask fa = fgen(a), fb = fgen(b);
      Mask fab = fgen(M.prod(a, b)), fba = fgen(M.prod(b, a));
      if (set_prod(fa, fb) != fab || fab != fba || set_prod(fb, fa) != fba) {
        rep.ii_holds = false;
        rep.ii_wx = a;
        rep.ii_wy = b;
        break;
      }
    }

  auto fs = all_filters(M);
  for (auto const& F : fs) {
    for (auto const& G : fs) {
      Mask join = generated_filter(M, F.elements | G.elements).elements;
      if (set_prod(F.elements, G.elements) != join
          || set_prod(G.elements, F.elements) != join) {
        rep.iii_holds = false;
        rep.iii_wf = F.elements;
        rep.iii_wg = G.elements;
        break;
      }
    }
    if (!rep.iii_holds) break;
  }

  rep.implication_ok = !rep.cond61 || rep.ii_holds;
  rep.equivalence_ok = rep.ii_holds == rep.iii_holds;
  return rep;
}

}  // namespace hoops

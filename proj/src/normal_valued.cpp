#include "hoops/normal_valued.hpp"

#include <sstream>

#include "hoops/rdp.hpp"

namespace hoops {

Conjugates conjugates(FiniteHoop const& M, Elem f, Elem x) {
  return {M.limp(f, M.prod(x, f)), M.rimp(f, M.prod(f, x))};
}

std::vector<long long> k_sequence(int nmax) {
  std::vector<long long> k(size_t(nmax) + 1, 0);
  if (nmax >= 1) k[1] = 1;
  for (int n = 1; n < nmax; ++n) k[size_t(n) + 1] = 2 * k[size_t(n)] + 2;
  return k;
}

Eq61Report check_61(FiniteHoop const& M) {
  for (Elem x = 0; x < M.size(); ++x)
    for (Elem y = 0; y < M.size(); ++y) {
      Elem lhs = M.prod(power(M, x, 2), power(M, y, 2));
      if (!M.leq(lhs, M.prod(y, x))) return {false, x, y};
    }
  return {};
}

BasisReport equational_basis_check(FiniteHoop const& M, int nmax) {
  nmax = nmax_or(M, nmax);
  auto e61 = check_61(M);
  if (!e61.holds) return {false, e61.wx, e61.wy, 0, 1};
  for (int n = 1; n <= nmax; ++n)
    for (Elem x = 0; x < M.size(); ++x)
      for (Elem y = 0; y < M.size(); ++y) {
        Elem rp = power(M, M.rimp(x, y), n);
        Elem lp2 = power(M, M.limp(x, y), 2 * n);
        if (!M.leq(power(M, M.limp(rp, y), 2), M.rimp(lp2, y)))
          return {false, x, y, n, 2};
        Elem lp = power(M, M.limp(x, y), n);
        Elem rp2 = power(M, M.rimp(x, y), 2 * n);
        if (!M.leq(power(M, M.rimp(lp, y), 2), M.limp(rp2, y)))
          return {false, x, y, n, 3};
      }
  return {};
}

DirectNvReport is_normal_valued_direct(FiniteHoop const& M) {
  if (!classify(M).basic) throw Inapplicable("is_normal_valued_direct: algebra is not basic");
  auto fs = all_filters(M);
  for (Elem g = 0; g < M.size(); ++g) {
    if (g == M.unit()) continue;
    for (auto const& rec : values_of(M, g, &fs)) {
      for (Elem f = 0; f < M.size(); ++f) {
        if (!rec.cover.contains(f)) continue;
        for (Elem v = 0; v < M.size(); ++v) {
          if (!rec.value.contains(v)) continue;
          auto c = conjugates(M, f, v);
          if (!rec.value.contains(c.lambda) || !rec.value.contains(c.rho))
            return {false, g, f, v, rec.value.elements};
        }
      }
    }
  }
  return {};
}

std::vector<ClaimId> const& all_claims() {
  static std::vector<ClaimId> const ids = {
      ClaimId::PROP31,  ClaimId::EQ31,    ClaimId::EQ41,   ClaimId::EQ42,
      ClaimId::PROP42,  ClaimId::PROP43,  ClaimId::LEMMA44, ClaimId::LEMMA46,
      ClaimId::EQ61,    ClaimId::EQ62,    ClaimId::PROP61, ClaimId::LEMMA62,
      ClaimId::LEMMA63, ClaimId::REMARK64, ClaimId::LEMMA65, ClaimId::THM66i,
      ClaimId::THM66ii, ClaimId::THM66iii, ClaimId::LEMMA67, ClaimId::THM68,
      ClaimId::COR69,   ClaimId::LEMMA610, ClaimId::EQ63,   ClaimId::EQ64,
      ClaimId::EQ65,    ClaimId::THM612,  ClaimId::CONJSUB,
  };
  return ids;
}

char const* claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::PROP31: return "PROP31";
    case ClaimId::EQ31: return "EQ31";
    case ClaimId::EQ41: return "EQ41";
    case ClaimId::EQ42: return "EQ42";
    case ClaimId::PROP42: return "PROP42";
    case ClaimId::PROP43: return "PROP43";
    case ClaimId::LEMMA44: return "LEMMA44";
    case ClaimId::LEMMA46: return "LEMMA46";
    case ClaimId::EQ61: return "EQ61";
    case ClaimId::EQ62: return "EQ62";
    case ClaimId::PROP61: return "PROP61";
    case ClaimId::LEMMA62: return "LEMMA62";
    case ClaimId::LEMMA63: return "LEMMA63";
    case ClaimId::REMARK64: return "REMARK64";
    case ClaimId::LEMMA65: return "LEMMA65";
    case ClaimId::THM66i: return "THM66i";
    case ClaimId::THM66ii: return "THM66ii";
    case ClaimId::THM66iii: return "THM66iii";
    case ClaimId::LEMMA67: return "LEMMA67";
    case ClaimId::THM68: return "THM68";
    case ClaimId::COR69: return "COR69";
    case ClaimId::LEMMA610: return "LEMMA610";
    case ClaimId::EQ63: return "EQ63";
    case ClaimId::EQ64: return "EQ64";
    case ClaimId::EQ65: return "EQ65";
    case ClaimId::THM612: return "THM612";
    case ClaimId::CONJSUB: return "CONJSUB";
  }
  return "?";
}

char const* claim_statement(ClaimId id) {
  switch (id) {
    case ClaimId::PROP31: return "under prelinearity, * distributes /\\ from both sides";
    case ClaimId::EQ31: return "under prelinearity, both join formulas equal the lattice join";
    case ClaimId::EQ41: return "F(a*b) = F(a) v F(b) = F(b*a)";
    case ClaimId::EQ42: return "F(a\\/b) = F(a) /\\ F(b) when the join exists";
    case ClaimId::PROP42: return "the filter lattice is distributive, families included";
    case ClaimId::PROP43: return "for basic algebras the nine primality conditions agree";
    case ClaimId::LEMMA44: return "a filter disjoint from a lattice ideal extends to a disjoint prime";
    case ClaimId::LEMMA46: return "f <= g iff Vf <= Vg for all values V";
    case ClaimId::EQ61: return "x^2 * y^2 <= y * x";
    case ClaimId::EQ62: return "under EQ61, (a*b)^n >= a^{k_n} * b^{k_n}";
    case ClaimId::PROP61: return "EQ61 implies the filter product law; set and lattice forms agree";
    case ClaimId::LEMMA62: return "for basic algebras every X-perp is a filter";
    case ClaimId::LEMMA63: return "values of a strong unit u intersect inside {a : a^n >= u}";
    case ClaimId::REMARK64: return "the minimal primes intersect to {1}";
    case ClaimId::LEMMA65: return "V(a*b) <= Vx at every value of x forces a^2*b^2 <= x";
    case ClaimId::THM66i: return "normal-valued implies x^2*y^2 <= y*x";
    case ClaimId::THM66ii: return "normal-valued implies ((x->y)^n ~> y)^2 <= (x~>y)^{2n} -> y";
    case ClaimId::THM66iii: return "normal-valued implies ((x~>y)^n -> y)^2 <= (x->y)^{2n} ~> y";
    case ClaimId::LEMMA67: return "under EQ61, {x >= f*a^n} = {x >= a^n*f} = filter generated by F, a";
    case ClaimId::THM68: return "the three inequality schemas imply normal-valued";
    case ClaimId::COR69: return "normal-valued iff the three inequality schemas hold";
    case ClaimId::LEMMA610: return "under EQ61, Vx > Vx^2 forces the right class into the left class";
    case ClaimId::EQ63: return "(x->0)~>0 = (x~>0)->0";
    case ClaimId::EQ64: return "(x->y)~>y = (x~>y)->y";
    case ClaimId::EQ65: return "under EQ64, (x->y)^n ~> y = (x~>y)^n -> y";
    case ClaimId::THM612: return "under EQ64, normal-valued iff x^2*y^2 <= y*x";
    case ClaimId::CONJSUB: return "conjugation is submultiplicative on both sides";
  }
  return "?";
}

std::optional<ClaimId> parse_claim(std::string const& s) {
  for (ClaimId id : all_claims())
    if (s == claim_name(id)) return id;
  return std::nullopt;
}

namespace {

std::string elems(std::initializer_list<long long> xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

ClaimResult pass(ClaimId id) { return {id, ClaimResult::Status::pass, "", ""}; }
ClaimResult fail(ClaimId id, std::string w) {
  return {id, ClaimResult::Status::fail, std::move(w), ""};
}
ClaimResult inapplicable(ClaimId id, std::string hyp) {
  return {id, ClaimResult::Status::inapplicable, "", std::move(hyp)};
}

}  // namespace

ClaimResult check_claim(FiniteHoop const& M, ClaimId id, int nmax) {
  nmax = nmax_or(M, nmax);
  int const n = M.size();
  Elem const u = M.unit();
  ClassFlags flags = classify(M);

  switch (id) {
    case ClaimId::PROP31: {
      if (!flags.prelinear) return inapplicable(id, "prelinearity");
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          for (Elem z = 0; z < n; ++z) {
            Elem m = M.meet(x, y);
            if (M.prod(z, m) != M.meet(M.prod(z, x), M.prod(z, y))
                || M.prod(m, z) != M.meet(M.prod(x, z), M.prod(y, z)))
              return fail(id, elems({x, y, z}));
          }
      return pass(id);
    }
    case ClaimId::EQ31: {
      if (!flags.prelinear) return inapplicable(id, "prelinearity");
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          MeetJoin mj = meet_join(M, x, y);
          if (!mj.join || mj.vee1 != *mj.join || mj.vee2 != *mj.join)
            return fail(id, elems({x, y}));
        }
      return pass(id);
    }
    case ClaimId::EQ41: {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          Mask fa = generated_filter(M, bit_of(a)).elements;
          Mask fb = generated_filter(M, bit_of(b)).elements;
          Mask join = generated_filter(M, fa | fb).elements;
          if (generated_filter(M, bit_of(M.prod(a, b))).elements != join
              || generated_filter(M, bit_of(M.prod(b, a))).elements != join)
            return fail(id, elems({a, b}));
        }
      return pass(id);
    }
    case ClaimId::EQ42: {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          Mask fa = generated_filter(M, bit_of(a)).elements;
          Mask fb = generated_filter(M, bit_of(b)).elements;
          if (generated_filter(M, bit_of(M.join(a, b))).elements != (fa & fb))
            return fail(id, elems({a, b}));
        }
      return pass(id);
    }
    case ClaimId::PROP42: {
      auto rep = filter_lattice(M);
      if (!rep.distributive)
        return fail(id, elems({rep.distributivity_witness[0], rep.distributivity_witness[1],
                               rep.distributivity_witness[2]}));
      if (!rep.family_law)
        return fail(id, "family " + std::to_string(rep.family_witness->second) + " at filter "
                            + std::to_string(rep.family_witness->first));
      return pass(id);
    }
    case ClaimId::PROP43: {
      if (!flags.basic) return inapplicable(id, "basic");
      auto fs = all_filters(M);
      for (auto const& F : fs) {
        if (F.elements == M.all()) continue;
        auto rep = prime_tests(M, F, &fs);
        if (!rep.agree)
          return fail(id, "filter " + std::to_string(F.elements));
      }
      return pass(id);
    }
    case ClaimId::LEMMA44: {
      if (!flags.basic) return inapplicable(id, "basic");
      auto fs = all_filters(M);
      for (Mask A = 1; A < (Mask{1} << n); ++A) {
        if (!is_lattice_ideal(M, A)) continue;
        for (auto const& F : fs) {
          if (F.elements & A) continue;
          Filter P = prime_extension(M, F, A);  // asserts primality itself
          if ((P.elements & A) || (F.elements & ~P.elements))
            return fail(id, "ideal " + std::to_string(A) + ", filter "
                                + std::to_string(F.elements));
        }
      }
      return pass(id);
    }
    case ClaimId::LEMMA46: {
      if (!flags.basic) return inapplicable(id, "basic");
      auto fs = all_filters(M);
      std::vector<std::pair<Filter, QuotientStructure>> values;
      for (Elem g = 0; g < n; ++g) {
        if (g == u) continue;
        for (auto const& rec : values_of(M, g, &fs))
          values.emplace_back(rec.value, class_structure(M, rec.value, Side::right));
      }
      for (Elem f = 0; f < n; ++f)
        for (Elem g = 0; g < n; ++g) {
          bool everywhere = true;
          for (auto const& [V, qs] : values)
            if (!qs.cls_leq(qs.class_of[size_t(f)], qs.class_of[size_t(g)])) {
              everywhere = false;
              break;
            }
          if (everywhere != M.leq(f, g)) return fail(id, elems({f, g}));
        }
      return pass(id);
    }
    case ClaimId::EQ61: {
      auto rep = check_61(M);
      return rep.holds ? pass(id) : fail(id, elems({rep.wx, rep.wy}));
    }
    case ClaimId::EQ62: {
      if (!check_61(M).holds) return inapplicable(id, "EQ61");
      auto k = k_sequence(nmax);
      for (int nn = 1; nn <= nmax; ++nn)
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b) {
            Elem lhs = power(M, M.prod(a, b), nn);
            Elem rhs = M.prod(power(M, a, k[size_t(nn)]), power(M, b, k[size_t(nn)]));
            if (!M.leq(rhs, lhs)) return fail(id, elems({a, b, nn}));
          }
      return pass(id);
    }
    case ClaimId::PROP61: {
      auto rep = check_filter_products(M);
      if (!rep.implication_ok)
        return fail(id, "EQ61 holds but the pointwise product law fails at "
                            + elems({rep.ii_wx, rep.ii_wy}));
      if (!rep.equivalence_ok) return fail(id, "set and lattice forms disagree");
      return pass(id);
    }
    case ClaimId::LEMMA62: {
      if (!flags.basic) return inapplicable(id, "basic");
      for (Mask X = 0; X < (Mask{1} << n); ++X)
        perp(M, X);  // asserts filterhood internally
      return pass(id);
    }
    case ClaimId::LEMMA63: {
      if (!flags.basic) return inapplicable(id, "basic");
      auto fs = all_filters(M);
      bool any = false;
      for (Elem su = 0; su < n; ++su) {
        if (!has_strong_unit(M, su)) continue;
        any = true;
        Mask inter = M.all();
        if (su != u)
          for (auto const& rec : values_of(M, su, &fs)) inter &= rec.value.elements;
        for (Elem a = 0; a < n; ++a) {
          if (!mask_has(inter, a)) continue;
          for (int nn = 1; nn <= nmax; ++nn)
            if (!M.leq(su, power(M, a, nn))) return fail(id, elems({su, a, nn}));
        }
      }
      if (!any) return inapplicable(id, "strong unit");
      return pass(id);
    }
    case ClaimId::REMARK64: {
      if (!flags.basic) return inapplicable(id, "basic");
      auto mins = minimal_primes(M);
      if (mins.empty()) return inapplicable(id, "a proper prime filter");
      Mask inter = M.all();
      for (auto const& P : mins) inter &= P.elements;
      if (inter != bit_of(u)) return fail(id, "intersection " + std::to_string(inter));
      return pass(id);
    }
    case ClaimId::LEMMA65: {
      if (!flags.basic) return inapplicable(id, "basic");
      auto fs = all_filters(M);
      // values and their right class structures, per witness element x
      for (Elem x = 0; x < n; ++x) {
        std::vector<QuotientStructure> qss;
        if (x != u)
          for (auto const& rec : values_of(M, x, &fs))
            qss.push_back(class_structure(M, rec.value, Side::right));
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b) {
            bool hyp = true;
            for (auto const& qs : qss)
              if (!qs.cls_leq(qs.class_of[size_t(M.prod(a, b))], qs.class_of[size_t(x)])) {
                hyp = false;
                break;
              }
            if (hyp && !M.leq(M.prod(power(M, a, 2), power(M, b, 2)), x))
              return fail(id, elems({a, b, x}));
          }
      }
      return pass(id);
    }
    case ClaimId::THM66i:
    case ClaimId::THM66ii:
    case ClaimId::THM66iii: {
      if (!flags.basic) return inapplicable(id, "basic");
      if (!is_normal_valued_direct(M).holds) return inapplicable(id, "normal-valued");
      if (id == ClaimId::THM66i) {
        auto rep = check_61(M);
        return rep.holds ? pass(id) : fail(id, elems({rep.wx, rep.wy}));
      }
      for (int nn = 1; nn <= nmax; ++nn)
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y) {
            if (id == ClaimId::THM66ii) {
              Elem lhs = power(M, M.limp(power(M, M.rimp(x, y), nn), y), 2);
              Elem rhs = M.rimp(power(M, M.limp(x, y), 2 * nn), y);
              if (!M.leq(lhs, rhs)) return fail(id, elems({x, y, nn}));
            } else {
              Elem lhs = power(M, M.rimp(power(M, M.limp(x, y), nn), y), 2);
              Elem rhs = M.limp(power(M, M.rimp(x, y), 2 * nn), y);
              if (!M.leq(lhs, rhs)) return fail(id, elems({x, y, nn}));
            }
          }
      return pass(id);
    }
    case ClaimId::LEMMA67: {
      if (!check_61(M).holds) return inapplicable(id, "EQ61");
      auto fs = all_filters(M);
      for (auto const& F : fs)
        for (Elem a = 0; a < n; ++a) {
          Mask gen = generated_filter(M, F.elements | bit_of(a)).elements;
          Mask right = 0, left = 0;
          for (int nn = 0; nn <= nmax; ++nn) {
            Elem an = power(M, a, nn);
            for (Elem f = 0; f < n; ++f) {
              if (!F.contains(f)) continue;
              right |= M.up_mask(M.prod(f, an));
              left |= M.up_mask(M.prod(an, f));
            }
          }
          if (right != gen || left != gen)
            return fail(id, "filter " + std::to_string(F.elements) + ", a=" + std::to_string(a));
        }
      return pass(id);
    }
    case ClaimId::THM68: {
      if (!flags.basic) return inapplicable(id, "basic");
      if (!equational_basis_check(M, nmax).holds)
        return inapplicable(id, "the three inequality schemas");
      auto rep = is_normal_valued_direct(M);
      return rep.holds ? pass(id) : fail(id, elems({rep.g, rep.f, rep.v}));
    }
    case ClaimId::COR69: {
      if (!flags.basic) return inapplicable(id, "basic");
      bool direct = is_normal_valued_direct(M).holds;
      bool equational = equational_basis_check(M, nmax).holds;
      if (direct != equational)
        return fail(id, std::string("direct=") + (direct ? "true" : "false")
                            + " equational=" + (equational ? "true" : "false"));
      return pass(id);
    }
    case ClaimId::LEMMA610: {
      if (!flags.basic) return inapplicable(id, "basic");
      if (!check_61(M).holds) return inapplicable(id, "EQ61");
      auto fs = all_filters(M);
      for (Elem g = 0; g < n; ++g) {
        if (g == u) continue;
        for (auto const& rec : values_of(M, g, &fs)) {
          auto right = class_structure(M, rec.value, Side::right);
          auto left = class_structure(M, rec.value, Side::left);
          for (Elem x = 0; x < n; ++x) {
            if (!rec.cover.contains(x) || rec.value.contains(x)) continue;
            int cx = right.class_of[size_t(x)];
            int cx2 = right.class_of[size_t(power(M, x, 2))];
            if (!right.cls_lt(cx2, cx)) continue;  // need Vx > Vx^2 strictly
            Mask rc = right.classes[size_t(cx)];
            Mask lc = left.classes[size_t(left.class_of[size_t(x)])];
            if (rc & ~lc) return fail(id, elems({g, x}));
          }
        }
      }
      return pass(id);
    }
    case ClaimId::EQ63: {
      Elem b = M.bottom();
      for (Elem x = 0; x < n; ++x)
        if (M.limp(M.rimp(x, b), b) != M.rimp(M.limp(x, b), b)) return fail(id, elems({x}));
      return pass(id);
    }
    case ClaimId::EQ64: {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (M.limp(M.rimp(x, y), y) != M.rimp(M.limp(x, y), y))
            return fail(id, elems({x, y}));
      return pass(id);
    }
    case ClaimId::EQ65: {
      if (!flags.basic) return inapplicable(id, "basic");
      if (!flags.eq64) return inapplicable(id, "EQ64");
      for (int nn = 1; nn <= nmax; ++nn)
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y) {
            Elem lhs = M.limp(power(M, M.rimp(x, y), nn), y);
            Elem rhs = M.rimp(power(M, M.limp(x, y), nn), y);
            if (lhs != rhs) return fail(id, elems({x, y, nn}));
          }
      return pass(id);
    }
    case ClaimId::THM612: {
      if (!flags.basic) return inapplicable(id, "basic");
      if (!flags.eq64) return inapplicable(id, "EQ64");
      bool nv = is_normal_valued_direct(M).holds;
      bool e61 = check_61(M).holds;
      if (nv != e61)
        return fail(id, std::string("normal-valued=") + (nv ? "true" : "false")
                            + " EQ61=" + (e61 ? "true" : "false"));
      return pass(id);
    }
    case ClaimId::CONJSUB: {
      for (Elem f = 0; f < n; ++f)
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y) {
            auto cxy = conjugates(M, f, M.prod(x, y));
            auto cx = conjugates(M, f, x);
            auto cy = conjugates(M, f, y);
            if (!M.leq(cxy.lambda, M.prod(cx.lambda, cy.lambda))
                || !M.leq(cxy.rho, M.prod(cx.rho, cy.rho)))
              return fail(id, elems({f, x, y}));
          }
      return pass(id);
    }
  }
  throw InputError("unknown claim id");
}

Q2Result q2_search(std::vector<FiniteHoop> const& source, int nmax) {
  Q2Result res;
  for (auto const& M : source) {
    ++res.scanned;
    if (!classify(M).basic) continue;
    ++res.basic_scanned;
    bool direct = is_normal_valued_direct(M).holds;
    bool equational = equational_basis_check(M, nmax).holds;
    (direct ? res.normal_valued_true : res.normal_valued_false) += 1;
    if (direct != equational) {
      res.fatal.push_back(M);
      continue;
    }
    if (check_61(M).holds && !direct) res.candidates.push_back(M);
  }
  return res;
}

}  // namespace hoops

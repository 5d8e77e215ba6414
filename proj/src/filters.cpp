#include "hoops/filters.hpp"

#include <algorithm>
#include <bit>

namespace hoops {

int Filter::count() const { return std::popcount(elements); }

bool is_filter(FiniteHoop const& M, Mask elements) {
  if (!mask_has(elements, M.unit())) return false;
  for (Elem x = 0; x < M.size(); ++x) {
    if (!mask_has(elements, x)) continue;
    if (M.up_mask(x) & ~elements) return false;  // upward closure
    for (Elem y = 0; y < M.size(); ++y)
      if (mask_has(elements, y) && !mask_has(elements, M.prod(x, y))) return false;
  }
  return true;
}

Filter generated_filter(FiniteHoop const& M, Mask seed) {
  Mask cur = seed | bit_of(M.unit());
  for (;;) {
    Mask next = cur;
    for (Elem x = 0; x < M.size(); ++x) {
      if (!mask_has(cur, x)) continue;
      next |= M.up_mask(x);
      for (Elem y = 0; y < M.size(); ++y)
        if (mask_has(cur, y)) next |= bit_of(M.prod(x, y));
    }
    if (next == cur) return Filter{cur};
    cur = next;
  }
}

std::vector<Filter> all_filters(FiniteHoop const& M) {
  std::vector<Mask> known{generated_filter(M, 0).elements};
  std::vector<Mask> frontier = known;
  while (!frontier.empty()) {
    std::vector<Mask> fresh;
    for (Mask F : frontier) {
      for (Elem a = 0; a < M.size(); ++a) {
        if (mask_has(F, a)) continue;
        Mask G = generated_filter(M, F | bit_of(a)).elements;
        if (std::find(known.begin(), known.end(), G) == known.end()) {
          known.push_back(G);
          fresh.push_back(G);
        }
      }
    }
    frontier = std::move(fresh);
  }
  std::sort(known.begin(), known.end());
  std::vector<Filter> out;
  out.reserve(known.size());
  for (Mask m : known) out.push_back(Filter{m});
  return out;
}

FilterLatticeReport filter_lattice(FiniteHoop const& M) {
  FilterLatticeReport rep;
  rep.filters = all_filters(M);
  int k = int(rep.filters.size());
  auto index_of = [&](Mask m) {
    auto it = std::lower_bound(rep.filters.begin(), rep.filters.end(), Filter{m});
    if (it == rep.filters.end() || it->elements != m)
      throw FatalInconsistency("filter lattice is not closed");
    return int(it - rep.filters.begin());
  };
  rep.join_of.assign(size_t(k), std::vector<int>(size_t(k)));
  rep.meet_of.assign(size_t(k), std::vector<int>(size_t(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      rep.meet_of[i][j] = index_of(rep.filters[i].elements & rep.filters[j].elements);
      rep.join_of[i][j] =
          index_of(generated_filter(M, rep.filters[i].elements | rep.filters[j].elements).elements);
    }
  for (int i = 0; i < k && rep.distributive; ++i)
    for (int j = 0; j < k && rep.distributive; ++j)
      for (int l = 0; l < k; ++l) {
        if (rep.meet_of[i][rep.join_of[j][l]]
            != rep.join_of[rep.meet_of[i][j]][rep.meet_of[i][l]]) {
          rep.distributive = false;
          rep.distributivity_witness = {i, j, l};
          break;
        }
      }
  // F /\ \/family = \/ (F /\ member), exhausted over subsets of the
  // filter list when that is affordable; larger lattices fall back to
  // families of size <= 3 (induction on binary distributivity covers
  // the rest).
  auto family_join = [&](Mask family) {
    Mask u = 0;
    for (int i = 0; i < k; ++i)
      if (mask_has(family, i)) u |= rep.filters[size_t(i)].elements;
    return generated_filter(M, u).elements;
  };
  if (k <= 16) {
    for (int f = 0; f < k && rep.family_law; ++f) {
      Mask F = rep.filters[size_t(f)].elements;
      for (Mask family = 0; family < (Mask{1} << k); ++family) {
        ++rep.families_checked;
        Mask lhs = F & family_join(family);
        Mask u = 0;
        for (int i = 0; i < k; ++i)
          if (mask_has(family, i)) u |= (F & rep.filters[size_t(i)].elements);
        Mask rhs = family == 0 ? generated_filter(M, 0).elements & F
                               : generated_filter(M, u).elements;
        if (lhs != rhs) {
          rep.family_law = false;
          rep.family_witness = {f, family};
          break;
        }
      }
    }
  } else {
    for (int f = 0; f < k && rep.family_law; ++f)
      for (int i = 0; i < k && rep.family_law; ++i)
        for (int j = 0; j < k && rep.family_law; ++j)
          for (int l = 0; l < k; ++l) {
            ++rep.families_checked;
            Mask family = bit_of(i) | bit_of(j) | bit_of(l);
            Mask F = rep.filters[size_t(f)].elements;
            Mask lhs = F & family_join(family);
            Mask u = (F & rep.filters[size_t(i)].elements)
                     | (F & rep.filters[size_t(j)].elements)
                     | (F & rep.filters[size_t(l)].elements);
            if (lhs != generated_filter(M, u).elements) {
              rep.family_law = false;
              rep.family_witness = {f, family};
              break;
            }
          }
  }
  return rep;
}

bool is_normal_filter(FiniteHoop const& M, Filter const& F) {
  if (!is_filter(M, F.elements)) throw ContractError("is_normal_filter: not a filter");
  bool by_sets = true;
  for (Elem a = 0; a < M.size() && by_sets; ++a) {
    Mask left = 0, right = 0;
    for (Elem h = 0; h < M.size(); ++h) {
      if (!F.contains(h)) continue;
      left |= bit_of(M.prod(a, h));
      right |= bit_of(M.prod(h, a));
    }
    if (left != right) by_sets = false;
  }
  bool by_arrows = true;
  for (Elem x = 0; x < M.size() && by_arrows; ++x)
    for (Elem y = 0; y < M.size(); ++y)
      if (F.contains(M.rimp(x, y)) != F.contains(M.limp(x, y))) {
        by_arrows = false;
        break;
      }
  if (by_sets != by_arrows)
    throw FatalInconsistency("normality characterizations disagree");
  return by_sets;
}

QuotientStructure class_structure(FiniteHoop const& M, Filter const& F, Side side) {
  if (!is_filter(M, F.elements)) throw ContractError("class_structure: not a filter");
  int n = M.size();
  auto equiv = [&](Elem a, Elem b) {
    if (side == Side::right)
      return F.contains(M.rimp(a, b)) && F.contains(M.rimp(b, a));
    return F.contains(M.limp(a, b)) && F.contains(M.limp(b, a));
  };
  QuotientStructure qs;
  qs.side = side;
  qs.class_of.assign(size_t(n), -1);
  for (Elem a = 0; a < n; ++a) {
    if (qs.class_of[size_t(a)] >= 0) continue;
    int id = int(qs.classes.size());
    Mask block = 0;
    for (Elem b = 0; b < n; ++b)
      if (equiv(a, b)) {
        block |= bit_of(b);
        qs.class_of[size_t(b)] = id;
      }
    qs.classes.push_back(block);
  }
  int k = int(qs.classes.size());
  qs.order_up.assign(size_t(k), 0);
  auto cls_rel = [&](Elem a, Elem b) {
    return side == Side::right ? F.contains(M.rimp(a, b)) : F.contains(M.limp(a, b));
  };
  for (int c1 = 0; c1 < k; ++c1) {
    Elem a = std::countr_zero(qs.classes[size_t(c1)]);
    for (int c2 = 0; c2 < k; ++c2) {
      Elem b = std::countr_zero(qs.classes[size_t(c2)]);
      bool le = cls_rel(a, b);
      // well-definedness: the relation may not depend on representatives
      for (Elem a2 = 0; a2 < n; ++a2) {
        if (!mask_has(qs.classes[size_t(c1)], a2)) continue;
        for (Elem b2 = 0; b2 < n; ++b2)
          if (mask_has(qs.classes[size_t(c2)], b2) && cls_rel(a2, b2) != le)
            throw FatalInconsistency("class order depends on representatives");
      }
      // product characterization: Fa <= Fb iff x*a <= b for some x in F
      bool witnessed = false;
      for (Elem x = 0; x < n && !witnessed; ++x) {
        if (!F.contains(x)) continue;
        Elem p = side == Side::right ? M.prod(x, a) : M.prod(a, x);
        if (M.leq(p, b)) witnessed = true;
      }
      if (witnessed != le)
        throw FatalInconsistency("class order disagrees with the product witness form");
      if (le) qs.order_up[size_t(c1)] |= bit_of(Elem(c2));
    }
  }
  qs.total = true;
  for (int c1 = 0; c1 < k && qs.total; ++c1)
    for (int c2 = 0; c2 < k; ++c2)
      if (!qs.cls_leq(c1, c2) && !qs.cls_leq(c2, c1)) {
        qs.total = false;
        break;
      }
  return qs;
}

QuotientResult quotient(FiniteHoop const& M, Filter const& F) {
  if (!is_normal_filter(M, F)) throw ContractError("quotient: filter is not normal");
  QuotientStructure qs = class_structure(M, F, Side::right);
  int k = int(qs.classes.size());
  HoopInput in;
  in.size = k;
  in.unit = qs.class_of[size_t(M.unit())];
  in.prod = SquareTable(k);
  SquareTable rimp(k), limp(k);
  for (int c1 = 0; c1 < k; ++c1) {
    Elem a = std::countr_zero(qs.classes[size_t(c1)]);
    for (int c2 = 0; c2 < k; ++c2) {
      Elem b = std::countr_zero(qs.classes[size_t(c2)]);
      in.prod(c1, c2) = qs.class_of[size_t(M.prod(a, b))];
      rimp(c1, c2) = qs.class_of[size_t(M.rimp(a, b))];
      limp(c1, c2) = qs.class_of[size_t(M.limp(a, b))];
      // congruence: the induced tables may not depend on representatives
      for (Elem a2 = 0; a2 < M.size(); ++a2) {
        if (!mask_has(qs.classes[size_t(c1)], a2)) continue;
        for (Elem b2 = 0; b2 < M.size(); ++b2) {
          if (!mask_has(qs.classes[size_t(c2)], b2)) continue;
          if (qs.class_of[size_t(M.prod(a2, b2))] != in.prod(c1, c2)
              || qs.class_of[size_t(M.rimp(a2, b2))] != rimp(c1, c2)
              || qs.class_of[size_t(M.limp(a2, b2))] != limp(c1, c2))
            throw FatalInconsistency("quotient tables depend on representatives");
        }
      }
    }
  }
  in.rimp = std::move(rimp);
  in.limp = std::move(limp);
  in.name = M.name().empty() ? "" : M.name() + "/F";
  auto res = validate(std::move(in));
  if (!res.ok()) throw FatalInconsistency("quotient by a normal filter failed validation");
  return {std::move(*res.hoop), qs.class_of};
}

namespace {

std::vector<Filter> const& ensure_filters(FiniteHoop const& M,
                                          std::vector<Filter> const* given,
                                          std::vector<Filter>& storage) {
  if (given) return *given;
  storage = all_filters(M);
  return storage;
}

}  // namespace

bool is_prime(FiniteHoop const& M, Filter const& F, std::vector<Filter> const* filters) {
  if (F.elements == M.all()) throw ContractError("is_prime: improper filter");
  std::vector<Filter> storage;
  auto const& fs = ensure_filters(M, filters, storage);
  for (auto const& F1 : fs)
    for (auto const& F2 : fs) {
      if ((F1.elements & F2.elements & ~F.elements) != 0) continue;  // F1 /\ F2 <= F
      if ((F1.elements & ~F.elements) && (F2.elements & ~F.elements)) return false;
    }
  return true;
}

PrimeReport prime_tests(FiniteHoop const& M, Filter const& F,
                        std::vector<Filter> const* filters) {
  if (!is_filter(M, F.elements)) throw ContractError("prime_tests: not a filter");
  if (F.elements == M.all()) throw ContractError("prime_tests: improper filter");
  std::vector<Filter> storage;
  auto const& fs = ensure_filters(M, filters, storage);
  int n = M.size();
  using Tri = PrimeReport::Tri;
  PrimeReport rep;
  auto set = [&](int i, char const* label, bool v, Elem wx = -1, Elem wy = -1) {
    rep.conditions[size_t(i)] = {label, v ? Tri::yes : Tri::no, wx, wy};
  };

  set(0, "i", is_prime(M, F, &fs));

  {  // (ii) f \/ g = 1 implies f in F or g in F
    bool ok = true;
    Elem wx = -1, wy = -1;
    for (Elem f = 0; f < n && ok; ++f)
      for (Elem g = 0; g < n; ++g)
        if (M.join(f, g) == M.unit() && !F.contains(f) && !F.contains(g)) {
          ok = false;
          wx = f;
          wy = g;
          break;
        }
    set(1, "ii", ok, wx, wy);
  }
  {  // (iii) f->g in F or g->f in F
    bool ok = true;
    Elem wx = -1, wy = -1;
    for (Elem f = 0; f < n && ok; ++f)
      for (Elem g = 0; g < n; ++g)
        if (!F.contains(M.rimp(f, g)) && !F.contains(M.rimp(g, f))) {
          ok = false;
          wx = f;
          wy = g;
          break;
        }
    set(2, "iii", ok, wx, wy);
  }
  {  // (iii') the ~> twin
    bool ok = true;
    Elem wx = -1, wy = -1;
    for (Elem f = 0; f < n && ok; ++f)
      for (Elem g = 0; g < n; ++g)
        if (!F.contains(M.limp(f, g)) && !F.contains(M.limp(g, f))) {
          ok = false;
          wx = f;
          wy = g;
          break;
        }
    set(3, "iii'", ok, wx, wy);
  }
  {  // (iv) f \/ g in F implies f in F or g in F
    bool ok = true;
    Elem wx = -1, wy = -1;
    for (Elem f = 0; f < n && ok; ++f)
      for (Elem g = 0; g < n; ++g)
        if (F.contains(M.join(f, g)) && !F.contains(f) && !F.contains(g)) {
          ok = false;
          wx = f;
          wy = g;
          break;
        }
    set(4, "iv", ok, wx, wy);
  }
  {  // (v) some c in F has c*f <= g or c*g <= f
    bool ok = true;
    Elem wx = -1, wy = -1;
    for (Elem f = 0; f < n && ok; ++f)
      for (Elem g = 0; g < n; ++g) {
        bool found = false;
        for (Elem c = 0; c < n && !found; ++c)
          if (F.contains(c) && (M.leq(M.prod(c, f), g) || M.leq(M.prod(c, g), f)))
            found = true;
        if (!found) {
          ok = false;
          wx = f;
          wy = g;
          break;
        }
      }
    set(5, "v", ok, wx, wy);
  }
  {  // (vi) filters above F form a chain
    bool ok = true;
    for (auto const& F1 : fs) {
      if ((F.elements & ~F1.elements) != 0) continue;  // F <= F1
      for (auto const& F2 : fs) {
        if ((F.elements & ~F2.elements) != 0) continue;
        if ((F1.elements & ~F2.elements) && (F2.elements & ~F1.elements)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    set(6, "vi", ok);
  }
  {  // (vii) finite meet-irreducibility
    bool ok = true;
    for (auto const& F1 : fs) {
      if (!(F.elements != F1.elements && (F.elements & ~F1.elements) == 0)) continue;
      for (auto const& F2 : fs) {
        if (!(F.elements != F2.elements && (F.elements & ~F2.elements) == 0)) continue;
        if ((F1.elements & F2.elements) == F.elements) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    set(7, "vii", ok);
  }
  {  // (viii) f, g not in F implies f \/ g not in F
    bool ok = true;
    Elem wx = -1, wy = -1;
    for (Elem f = 0; f < n && ok; ++f)
      for (Elem g = 0; g < n; ++g)
        if (!F.contains(f) && !F.contains(g) && F.contains(M.join(f, g))) {
          ok = false;
          wx = f;
          wy = g;
          break;
        }
    set(8, "viii", ok, wx, wy);
  }

  bool first = true, val = false;
  for (auto const& e : rep.conditions) {
    if (e.result == Tri::inapplicable) continue;
    bool v = e.result == Tri::yes;
    if (first) {
      val = v;
      first = false;
    } else if (v != val) {
      rep.agree = false;
    }
  }
  return rep;
}

bool PrimeReport::all_yes() const {
  for (auto const& e : conditions)
    if (e.result != Tri::yes) return false;
  return true;
}

std::vector<ValueRecord> values_of(FiniteHoop const& M, Elem g,
                                   std::vector<Filter> const* filters) {
  if (g == M.unit()) throw ContractError("values_of: g must differ from the unit");
  std::vector<Filter> storage;
  auto const& fs = ensure_filters(M, filters, storage);
  std::vector<ValueRecord> out;
  for (auto const& V : fs) {
    if (V.contains(g)) continue;
    bool maximal = true;
    for (auto const& W : fs) {
      if (W.elements == V.elements || (V.elements & ~W.elements)) continue;  // need V < W
      if (!W.contains(g)) {
        maximal = false;
        break;
      }
    }
    if (maximal)
      out.push_back({g, V, generated_filter(M, V.elements | bit_of(g))});
  }
  return out;
}

std::vector<Filter> minimal_primes(FiniteHoop const& M, std::vector<Filter> const* filters) {
  std::vector<Filter> storage;
  auto const& fs = ensure_filters(M, filters, storage);
  std::vector<Filter> primes;
  for (auto const& F : fs)
    if (F.elements != M.all() && is_prime(M, F, &fs)) primes.push_back(F);
  std::vector<Filter> out;
  for (auto const& P : primes) {
    bool minimal = true;
    for (auto const& Q : primes)
      if (Q.elements != P.elements && (Q.elements & ~P.elements) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(P);
  }
  return out;
}

std::vector<Filter> maximal_filters(FiniteHoop const& M, std::vector<Filter> const* filters) {
  std::vector<Filter> storage;
  auto const& fs = ensure_filters(M, filters, storage);
  std::vector<Filter> out;
  for (auto const& F : fs) {
    if (F.elements == M.all()) continue;
    bool maximal = true;
    for (auto const& G : fs)
      if (G.elements != M.all() && G.elements != F.elements
          && (F.elements & ~G.elements) == 0) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(F);
  }
  return out;
}

bool has_strong_unit(FiniteHoop const& M, Elem u) {
  return generated_filter(M, bit_of(u)).elements == M.all();
}

Filter perp(FiniteHoop const& M, Mask X) {
  if (!classify(M).basic) throw Inapplicable("perp: algebra is not basic");
  Mask out = 0;
  for (Elem x = 0; x < M.size(); ++x) {
    bool all_one = true;
    for (Elem a = 0; a < M.size() && all_one; ++a)
      if (mask_has(X, a) && M.join(x, a) != M.unit()) all_one = false;
    if (all_one) out |= bit_of(x);
  }
  if (!is_filter(M, out))
    throw FatalInconsistency("perp produced a non-filter");  // the lemma's content
  return Filter{out};
}

bool is_lattice_ideal(FiniteHoop const& M, Mask A) {
  for (Elem a = 0; a < M.size(); ++a) {
    if (!mask_has(A, a)) continue;
    if (M.down_mask(a) & ~A) return false;
    for (Elem b = 0; b < M.size(); ++b)
      if (mask_has(A, b) && !mask_has(A, M.join(a, b))) return false;
  }
  return true;
}

Filter prime_extension(FiniteHoop const& M, Filter const& F, Mask A) {
  if (!classify(M).basic) throw Inapplicable("prime_extension: algebra is not basic");
  if (A == 0) throw ContractError("prime_extension: A must be nonempty");
  if (!is_lattice_ideal(M, A)) throw ContractError("prime_extension: A is not a lattice ideal");
  if (!is_filter(M, F.elements)) throw ContractError("prime_extension: F is not a filter");
  if (F.elements & A) throw ContractError("prime_extension: F meets A");
  Mask P = F.elements;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem a = 0; a < M.size(); ++a) {
      if (mask_has(P, a)) continue;
      Mask Q = generated_filter(M, P | bit_of(a)).elements;
      if ((Q & A) == 0) {
        P = Q;
        grew = true;
      }
    }
  }
  Filter out{P};
  if (!is_prime(M, out))
    throw FatalInconsistency("prime_extension produced a non-prime filter");
  return out;
}

}  // namespace hoops

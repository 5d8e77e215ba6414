#include "hoops/cones.hpp"

#include <algorithm>
#include <cstdlib>

namespace hoops {

namespace {

FiniteHoop must_validate(HoopInput in, char const* what) {
  auto res = validate(std::move(in));
  if (!res.ok())
    throw FatalInconsistency(std::string(what) + " produced an invalid algebra: axiom "
                             + res.violations.front().axiom);
  return std::move(*res.hoop);
}

}  // namespace

FiniteHoop make_chain(ChainKind kind, int n) {
  if (n < 1) throw ContractError("make_chain: n must be >= 1");
  HoopInput in;
  in.size = n;
  in.unit = n - 1;
  in.zero = 0;
  in.prod = SquareTable(n);
  SquareTable imp(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (kind == ChainKind::lukasiewicz) {
        in.prod(x, y) = std::max(x + y - (n - 1), 0);
        imp(x, y) = std::min(y - x + (n - 1), n - 1);
      } else {
        in.prod(x, y) = std::min(x, y);
        imp(x, y) = x <= y ? n - 1 : y;
      }
    }
  }
  in.rimp = imp;
  in.limp = imp;
  in.name = (kind == ChainKind::lukasiewicz ? "lukasiewicz-" : "godel-") + std::to_string(n);
  return must_validate(std::move(in), "make_chain");
}

FiniteHoop direct_product(FiniteHoop const& A, FiniteHoop const& B) {
  int na = A.size(), nb = B.size(), n = na * nb;
  if (n > MAX_SIZE) throw InputError("direct_product: result exceeds the size cap");
  auto idx = [nb](Elem a, Elem b) { return a * nb + b; };
  HoopInput in;
  in.size = n;
  in.unit = idx(A.unit(), B.unit());
  in.zero = idx(A.bottom(), B.bottom());
  in.prod = SquareTable(n);
  SquareTable rimp(n), limp(n);
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1)
      for (Elem a2 = 0; a2 < na; ++a2)
        for (Elem b2 = 0; b2 < nb; ++b2) {
          Elem x = idx(a1, b1), y = idx(a2, b2);
          in.prod(x, y) = idx(A.prod(a1, a2), B.prod(b1, b2));
          rimp(x, y) = idx(A.rimp(a1, a2), B.rimp(b1, b2));
          limp(x, y) = idx(A.limp(a1, a2), B.limp(b1, b2));
        }
  in.rimp = std::move(rimp);
  in.limp = std::move(limp);
  in.name = "prod(" + A.name() + "," + B.name() + ")";
  return must_validate(std::move(in), "direct_product");
}

FiniteHoop ordinal_sum(FiniteHoop const& M0, FiniteHoop const& M1) {
  int n0 = M0.size() - 1, n1 = M1.size() - 1;  // non-unit counts
  int n = n0 + n1 + 1;
  if (n > MAX_SIZE) throw InputError("ordinal_sum: result exceeds the size cap");
  Elem const top = n - 1;

  // old index -> new index, skipping each summand's unit
  std::vector<Elem> map0(M0.size()), map1(M1.size());
  {
    Elem next = 0;
    for (Elem x = 0; x < M0.size(); ++x) map0[x] = (x == M0.unit()) ? top : next++;
    next = n0;
    for (Elem x = 0; x < M1.size(); ++x) map1[x] = (x == M1.unit()) ? top : next++;
  }
  auto comp = [&](Elem x) { return x == top ? 2 : (x < n0 ? 0 : 1); };
  // new index -> old index within its component
  std::vector<Elem> back(n);
  for (Elem x = 0; x < M0.size(); ++x) back[map0[x]] = x;
  for (Elem x = 0; x < M1.size(); ++x) back[map1[x]] = x;
  back[top] = -1;

  HoopInput in;
  in.size = n;
  in.unit = top;
  in.prod = SquareTable(n);
  SquareTable rimp(n), limp(n);
  auto fill = [&](Elem x, Elem y) {
    int cx = comp(x), cy = comp(y);
    if (cx == 2) {  // 1*y = y, 1->y = y, 1~>y = y
      in.prod(x, y) = y;
      rimp(x, y) = y;
      limp(x, y) = y;
      return;
    }
    if (cy == 2) {
      in.prod(x, y) = x;
      rimp(x, y) = top;
      limp(x, y) = top;
      return;
    }
    if (cx == cy) {
      FiniteHoop const& M = cx == 0 ? M0 : M1;
      std::vector<Elem> const& map = cx == 0 ? map0 : map1;
      in.prod(x, y) = map[M.prod(back[x], back[y])];
      rimp(x, y) = map[M.rimp(back[x], back[y])];
      limp(x, y) = map[M.limp(back[x], back[y])];
      return;
    }
    if (cx < cy) {  // x strictly below y's component
      in.prod(x, y) = x;
      rimp(x, y) = top;
      limp(x, y) = top;
    } else {  // x strictly above y's component
      in.prod(x, y) = y;
      rimp(x, y) = y;
      limp(x, y) = y;
    }
  };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) fill(x, y);
  in.rimp = std::move(rimp);
  in.limp = std::move(limp);
  in.name = "osum(" + M0.name() + "," + M1.name() + ")";
  return must_validate(std::move(in), "ordinal_sum");
}

// --- cones ---------------------------------------------------------------

namespace {

bool lex_leq(ConeElem const& x, ConeElem const& y) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return true;
}

ConeElem zero_elem(int k) { return ConeElem(size_t(k), 0); }

}  // namespace

bool cone_contains(ConeModel const& m, ConeElem const& x) {
  if (int(x.size()) != m.dim) return false;
  if (m.order == ConeOrder::pointwise) {
    for (auto c : x)
      if (c > 0) return false;
    return true;
  }
  return lex_leq(x, zero_elem(m.dim));
}

bool cone_leq(ConeModel const& m, ConeElem const& x, ConeElem const& y) {
  if (m.order == ConeOrder::lex) return lex_leq(x, y);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

ConeElem cone_prod(ConeModel const&, ConeElem const& x, ConeElem const& y) {
  ConeElem r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

ConeElem cone_meet(ConeModel const& m, ConeElem const& x, ConeElem const& y) {
  if (m.order == ConeOrder::lex) return lex_leq(x, y) ? x : y;
  ConeElem r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = std::min(x[i], y[i]);
  return r;
}

ConeElem cone_join(ConeModel const& m, ConeElem const& x, ConeElem const& y) {
  if (m.order == ConeOrder::lex) return lex_leq(x, y) ? y : x;
  ConeElem r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = std::max(x[i], y[i]);
  return r;
}

ConeElem cone_imp(ConeModel const& m, ConeElem const& x, ConeElem const& y) {
  ConeElem diff(x.size());
  for (size_t i = 0; i < x.size(); ++i) diff[i] = y[i] - x[i];
  return cone_meet(m, diff, zero_elem(m.dim));
}

ConeOps cone_ops(ConeModel const& m, ConeElem const& x, ConeElem const& y) {
  ConeElem imp = cone_imp(m, x, y);
  return {cone_prod(m, x, y), imp, imp, cone_meet(m, x, y)};
}

char const* sample_property_name(SampleProperty p) {
  switch (p) {
    case SampleProperty::eq61: return "EQ61";
    case SampleProperty::thm66ii: return "THM66ii";
    case SampleProperty::thm66iii: return "THM66iii";
    case SampleProperty::eq63: return "EQ63";
    case SampleProperty::eq64: return "EQ64";
    case SampleProperty::prop31: return "PROP31";
    case SampleProperty::prelinearity: return "prelinearity";
    case SampleProperty::residuation: return "residuation";
  }
  return "?";
}

std::optional<SampleProperty> parse_sample_property(std::string const& s) {
  for (SampleProperty p : {SampleProperty::eq61, SampleProperty::thm66ii,
                           SampleProperty::thm66iii, SampleProperty::eq63,
                           SampleProperty::eq64, SampleProperty::prop31,
                           SampleProperty::prelinearity, SampleProperty::residuation}) {
    if (s == sample_property_name(p)) return p;
  }
  return std::nullopt;
}

namespace {

struct Lcg64 {
  std::uint64_t s;
  explicit Lcg64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 32;
  }
};

ConeElem draw(ConeModel const& m, Lcg64& rng, long long box) {
  // uniform in [-box, 0] per coordinate, rejection for cone membership
  for (;;) {
    ConeElem x(size_t(m.dim));
    for (int i = 0; i < m.dim; ++i)
      x[size_t(i)] = -(long long)(rng.next() % std::uint64_t(box + 1));
    if (cone_contains(m, x)) return x;
  }
}

ConeElem cone_pow(ConeModel const& m, ConeElem const& x, int n) {
  ConeElem r = zero_elem(m.dim);
  for (int i = 0; i < n; ++i) r = cone_prod(m, r, x);
  return r;
}

}  // namespace

SampleReport sample_check(ConeModel const& m, SampleProperty property,
                          long long trials, long long box, std::uint64_t seed) {
  if (trials < 1) throw ContractError("sample_check: trials must be >= 1");
  SampleReport rep;
  rep.property = property;
  rep.trials = trials;
  if (property == SampleProperty::eq63) {
    rep.inapplicable = true;  // no least element in a nontrivial cone
    return rep;
  }
  ConeElem const e = zero_elem(m.dim);
  for (long long t = 0; t < trials; ++t) {
    Lcg64 rng(seed + std::uint64_t(t) * 0x9E3779B97F4A7C15ULL);
    ConeElem x = draw(m, rng, box), y = draw(m, rng, box), z = draw(m, rng, box);
    bool ok = true;
    switch (property) {
      case SampleProperty::eq61: {
        ConeElem lhs = cone_prod(m, cone_pow(m, x, 2), cone_pow(m, y, 2));
        ok = cone_leq(m, lhs, cone_prod(m, y, x));
        break;
      }
      case SampleProperty::thm66ii:
      case SampleProperty::thm66iii: {
        // the two residuals coincide in an abelian cone, so (ii) and
        // (iii) have the same reading; evaluate at n = 1..8
        for (int nn = 1; nn <= 8 && ok; ++nn) {
          ConeElem a = cone_imp(m, cone_pow(m, cone_imp(m, x, y), nn), y);
          ConeElem lhs = cone_pow(m, a, 2);
          ConeElem rhs = cone_imp(m, cone_pow(m, cone_imp(m, x, y), 2 * nn), y);
          ok = cone_leq(m, lhs, rhs);
        }
        break;
      }
      case SampleProperty::eq64: {
        ConeOps xy = cone_ops(m, x, y);
        ok = cone_imp(m, xy.rimp, y) == cone_imp(m, xy.limp, y);
        break;
      }
      case SampleProperty::prop31: {
        ConeElem lhs = cone_prod(m, z, cone_meet(m, x, y));
        ConeElem rhs = cone_meet(m, cone_prod(m, z, x), cone_prod(m, z, y));
        ConeElem lhs2 = cone_prod(m, cone_meet(m, x, y), z);
        ConeElem rhs2 = cone_meet(m, cone_prod(m, x, z), cone_prod(m, y, z));
        ok = lhs == rhs && lhs2 == rhs2;
        break;
      }
      case SampleProperty::prelinearity: {
        ok = cone_join(m, cone_imp(m, x, y), cone_imp(m, y, x)) == e;
        break;
      }
      case SampleProperty::residuation: {
        bool below = cone_leq(m, cone_prod(m, z, x), y);
        bool adj = cone_leq(m, z, cone_imp(m, x, y));
        ok = below == adj;
        break;
      }
      case SampleProperty::eq63:
        break;
    }
    if (ok) {
      ++rep.passes;
    } else if (!rep.fatal) {
      rep.fatal = true;  // abelian cones satisfy all sampled properties
      rep.counterexample = {x, y, z};
    }
  }
  return rep;
}

}  // namespace hoops

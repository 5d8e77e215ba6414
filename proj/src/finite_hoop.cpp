#include "hoops/finite_hoop.hpp"

#include <algorithm>
#include <bit>

namespace hoops {

SquareTable SquareTable::from_rows(std::vector<std::vector<Elem>> const& rows) {
  int n = int(rows.size());
  SquareTable t(n);
  for (int x = 0; x < n; ++x) {
    if (int(rows[x].size()) != n) throw InputError("table is not square");
    for (int y = 0; y < n; ++y) t(x, y) = rows[x][y];
  }
  return t;
}

namespace {

void check_table(SquareTable const& t, int n, char const* what) {
  if (t.dim() != n) throw InputError(std::string(what) + ": dimension mismatch");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t(x, y) < 0 || t(x, y) >= n)
        throw InputError(std::string(what) + ": entry out of range at (" + std::to_string(x)
                         + "," + std::to_string(y) + ")");
}

std::vector<Mask> order_from_arrow(SquareTable const& arrow, Elem unit) {
  int n = arrow.dim();
  std::vector<Mask> up(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (arrow(x, y) == unit) up[x] |= bit_of(y);
  return up;
}

}  // namespace

std::optional<ArrowTables> derive_arrows(SquareTable const& prod,
                                         std::vector<Mask> const& up,
                                         ArrowFailure* failure) {
  int n = prod.dim();
  ArrowTables out{SquareTable(n), SquareTable(n)};
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Mask rset = 0, lset = 0;
      for (Elem z = 0; z < n; ++z) {
        if (mask_has(up[prod(z, x)], y)) rset |= bit_of(z);
        if (mask_has(up[prod(x, z)], y)) lset |= bit_of(z);
      }
      // greatest element of a set S under <=: the z in S with s <= z for
      // every s in S.
      Elem rbest = -1, lbest = -1;
      for (Elem z = 0; z < n; ++z) {
        if (!mask_has(rset, z)) continue;
        bool greatest = true;
        for (Elem s = 0; s < n && greatest; ++s)
          if (mask_has(rset, s) && !mask_has(up[s], z)) greatest = false;
        if (greatest) {
          rbest = z;
          break;
        }
      }
      for (Elem z = 0; z < n; ++z) {
        if (!mask_has(lset, z)) continue;
        bool greatest = true;
        for (Elem s = 0; s < n && greatest; ++s)
          if (mask_has(lset, s) && !mask_has(up[s], z)) greatest = false;
        if (greatest) {
          lbest = z;
          break;
        }
      }
      if (rbest < 0) {
        if (failure) *failure = {true, x, y};
        return std::nullopt;
      }
      if (lbest < 0) {
        if (failure) *failure = {false, x, y};
        return std::nullopt;
      }
      out.rimp(x, y) = rbest;
      out.limp(x, y) = lbest;
    }
  }
  return out;
}

ValidationResult validate(HoopInput in) {
  int n = in.size;
  if (n < 1) throw InputError("size must be at least 1");
  if (n > MAX_SIZE) throw InputError("size exceeds the supported maximum of 64");
  if (in.unit < 0 || in.unit >= n) throw InputError("unit out of range");
  check_table(in.prod, n, "prod");
  if (in.rimp) check_table(*in.rimp, n, "rimp");
  if (in.limp) check_table(*in.limp, n, "limp");
  if (in.zero && (*in.zero < 0 || *in.zero >= n)) throw InputError("zero out of range");
  if (in.leq) {
    if (int(in.leq->size()) != n) throw InputError("leq: dimension mismatch");
    for (Elem x = 0; x < n; ++x)
      if ((*in.leq)[x] & ~full_mask(n)) throw InputError("leq: entry out of range");
  }
  if (!in.rimp && !in.limp && !in.leq)
    throw InputError("need at least one of rimp, limp, leq to fix the order");

  std::vector<AxiomViolation> violations;

  // Order source: an explicit leq wins, else the unit rows of an arrow.
  std::vector<Mask> up;
  if (in.leq) up = *in.leq;
  else if (in.rimp) up = order_from_arrow(*in.rimp, in.unit);
  else up = order_from_arrow(*in.limp, in.unit);

  if (!in.rimp || !in.limp) {
    ArrowFailure fail;
    auto derived = derive_arrows(in.prod, up, &fail);
    if (!derived) {
      violations.push_back({"residuation", fail.x, fail.y, -1,
                            fail.right ? "no greatest z with z*x <= y"
                                       : "no greatest z with x*z <= y"});
      return {std::nullopt, std::move(violations)};
    }
    if (!in.rimp) in.rimp = std::move(derived->rimp);
    if (!in.limp) in.limp = std::move(derived->limp);
  }

  SquareTable const& P = in.prod;
  SquareTable const& R = *in.rimp;
  SquareTable const& L = *in.limp;
  Elem const u = in.unit;

  for (Elem x = 0; x < n; ++x) {
    if (P(x, u) != x || P(u, x) != x)
      violations.push_back({"i", x, -1, -1, "x*1 or 1*x differs from x"});
    if (R(x, x) != u || L(x, x) != u)
      violations.push_back({"ii", x, -1, -1, "x->x or x~>x differs from 1"});
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (R(P(x, y), z) != R(x, R(y, z)))
          violations.push_back({"iii", x, y, z, "(x*y)->z != x->(y->z)"});
        if (L(P(x, y), z) != L(y, L(x, z)))
          violations.push_back({"iv", x, y, z, "(x*y)~>z != y~>(x~>z)"});
      }
      Elem e1 = P(R(x, y), x), e2 = P(R(y, x), y), e3 = P(x, L(x, y)), e4 = P(y, L(y, x));
      if (e1 != e2 || e1 != e3 || e1 != e4)
        violations.push_back({"v", x, y, -1, "divisibility terms disagree"});
    }
  }

  // Order coherence: both arrows must induce the same relation, and the
  // relation must be a partial order with top 1 whose binary glb is the
  // common divisibility value of (v).
  std::vector<Mask> up2(n, 0), down(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      bool r1 = R(x, y) == u, l1 = L(x, y) == u;
      if (r1 != l1)
        violations.push_back({"order", x, y, -1, "rimp(x,y)=1 and limp(x,y)=1 disagree"});
      if (r1) {
        up2[x] |= bit_of(y);
        down[y] |= bit_of(x);
      }
    }
  if (in.leq && up2 != up)
    violations.push_back({"order", -1, -1, -1, "supplied leq disagrees with the arrows"});
  for (Elem x = 0; x < n; ++x) {
    if (!mask_has(up2[x], u)) violations.push_back({"top", x, -1, -1, "x <= 1 fails"});
    for (Elem y = 0; y < n; ++y) {
      if (x != y && mask_has(up2[x], y) && mask_has(up2[y], x))
        violations.push_back({"order", x, y, -1, "antisymmetry fails"});
      if (mask_has(up2[x], y) && (up2[y] & ~up2[x]))
        violations.push_back({"order", x, y, -1, "transitivity fails"});
    }
  }
  if (!violations.empty()) return {std::nullopt, std::move(violations)};

  SquareTable meet(n), join(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem m = P(R(x, y), x);
      Mask lower = down[x] & down[y];
      if (!mask_has(lower, m) || (lower & ~down[m]))
        violations.push_back({"meet", x, y, -1, "(x->y)*x is not the glb of {x,y}"});
      meet(x, y) = m;
    }
  }
  if (in.zero) {
    for (Elem x = 0; x < n; ++x)
      if (!mask_has(up2[*in.zero], x))
        violations.push_back({"bottom", x, -1, -1, "declared zero is not below x"});
  }
  if (!violations.empty()) return {std::nullopt, std::move(violations)};

  // Joins always exist in a finite meet-semilattice with top: the glb of
  // the (nonempty) set of common upper bounds is itself an upper bound.
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Mask upper = up2[x] & up2[y];
      Elem j = -1;
      for (Elem c = 0; c < n; ++c)
        if (mask_has(upper, c) && (upper & ~up2[c]) == 0) {
          j = c;
          break;
        }
      if (j < 0)
        throw FatalInconsistency("finite lattice has a joinless pair after validation");
      join(x, y) = j;
    }
  }
  Elem bottom = 0;
  for (Elem x = 0; x < n; ++x) bottom = meet(bottom, x);

  FiniteHoop M;
  M.n_ = n;
  M.unit_ = u;
  M.zero_ = in.zero;
  M.bottom_ = bottom;
  M.prod_ = in.prod;
  M.rimp_ = std::move(*in.rimp);
  M.limp_ = std::move(*in.limp);
  M.meet_ = std::move(meet);
  M.join_ = std::move(join);
  M.up_ = std::move(up2);
  M.down_ = std::move(down);
  M.name_ = std::move(in.name);
  return {std::move(M), {}};
}

ClassFlags classify(FiniteHoop const& M) {
  int n = M.size();
  Elem u = M.unit();
  ClassFlags f;

  f.bounded = true;  // finite meet-semilattice: fold of all meets is least
  f.lattice = true;  // joins computed for every pair during validation

  f.commutative = true;
  for (Elem x = 0; x < n && f.commutative; ++x)
    for (Elem y = 0; y < n && f.commutative; ++y)
      if (M.prod(x, y) != M.prod(y, x)) f.commutative = false;

  f.cancellative = true;
  for (Elem x = 0; x < n && f.cancellative; ++x)
    for (Elem y = 0; y < n && f.cancellative; ++y)
      for (Elem z = 0; z < n && f.cancellative; ++z) {
        if (y == z) continue;
        if (M.prod(x, y) == M.prod(x, z) || M.prod(y, x) == M.prod(z, x))
          f.cancellative = false;
      }

  f.prelinear = true;
  for (Elem x = 0; x < n && f.prelinear; ++x)
    for (Elem y = 0; y < n && f.prelinear; ++y) {
      if (M.join(M.rimp(x, y), M.rimp(y, x)) != u) f.prelinear = false;
      if (M.join(M.limp(x, y), M.limp(y, x)) != u) f.prelinear = false;
    }

  f.basic = true;
  for (Elem x = 0; x < n && f.basic; ++x)
    for (Elem y = 0; y < n && f.basic; ++y)
      for (Elem z = 0; z < n && f.basic; ++z) {
        if (!M.leq(M.rimp(M.rimp(x, y), z), M.rimp(M.rimp(M.rimp(y, x), z), z)))
          f.basic = false;
        if (!M.leq(M.limp(M.limp(x, y), z), M.limp(M.limp(M.limp(y, x), z), z)))
          f.basic = false;
      }

  Elem b = M.bottom();
  f.good = true;
  for (Elem x = 0; x < n && f.good; ++x)
    if (M.limp(M.rimp(x, b), b) != M.rimp(M.limp(x, b), b)) f.good = false;

  f.eq64 = true;
  for (Elem x = 0; x < n && f.eq64; ++x)
    for (Elem y = 0; y < n && f.eq64; ++y)
      if (M.limp(M.rimp(x, y), y) != M.rimp(M.limp(x, y), y)) f.eq64 = false;

  f.pseudo_bl = f.bounded && f.prelinear;

  if (f.prelinear && !(f.basic && f.lattice))
    throw FatalInconsistency("prelinear algebra failed basic/lattice");
  if (f.commutative && !(f.good && f.eq64))
    throw FatalInconsistency("commutative algebra failed good/eq64");
  return f;
}

MeetJoin meet_join(FiniteHoop const& M, Elem x, Elem y, ClassFlags const* flags) {
  MeetJoin r{};
  r.meet = M.meet(x, y);
  Elem a1 = M.rimp(M.limp(x, y), y), a2 = M.rimp(M.limp(y, x), x);
  r.vee1 = M.meet(a1, a2);
  Elem b1 = M.limp(M.rimp(x, y), y), b2 = M.limp(M.rimp(y, x), x);
  r.vee2 = M.meet(b1, b2);
  r.join = M.join(x, y);
  if (flags && flags->prelinear) {
    if (!(r.vee1 == r.vee2 && r.join && r.vee1 == *r.join))
      throw FatalInconsistency("prelinear algebra: vee1/vee2/join disagree");
  }
  return r;
}

Elem power(FiniteHoop const& M, Elem x, long long n) {
  if (n < 0) throw ContractError("power: negative exponent");
  Elem r = M.unit();
  for (long long i = 0; i < n; ++i) {
    Elem next = M.prod(r, x);
    if (next == r) return r;  // powers are descending; stabilized
    r = next;
  }
  return r;
}

int stab_index(FiniteHoop const& M, Elem x) {
  Elem p = x;
  for (int k = 1; k <= M.size() + 1; ++k) {
    Elem q = M.prod(p, x);
    if (q == p) return k;
    p = q;
  }
  throw FatalInconsistency("powers failed to stabilize within |M| steps");
}

}  // namespace hoops

#include "hoops/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace hoops {

bool EnumRestrict::admits(ClassFlags const& f) const {
  if (bounded && !f.bounded) return false;
  if (commutative && !f.commutative) return false;
  if (cancellative && !f.cancellative) return false;
  if (prelinear && !f.prelinear) return false;
  if (basic && !f.basic) return false;
  if (good && !f.good) return false;
  if (eq64 && !f.eq64) return false;
  if (pseudo_bl && !f.pseudo_bl) return false;
  if (lattice && !f.lattice) return false;
  return true;
}

FiniteHoop relabel(FiniteHoop const& A, std::vector<Elem> const& perm) {
  int n = A.size();
  HoopInput in;
  in.size = n;
  in.unit = perm[size_t(A.unit())];
  if (A.zero()) in.zero = perm[size_t(*A.zero())];
  in.prod = SquareTable(n);
  SquareTable rimp(n), limp(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      in.prod(perm[size_t(x)], perm[size_t(y)]) = perm[size_t(A.prod(x, y))];
      rimp(perm[size_t(x)], perm[size_t(y)]) = perm[size_t(A.rimp(x, y))];
      limp(perm[size_t(x)], perm[size_t(y)]) = perm[size_t(A.limp(x, y))];
    }
  in.rimp = std::move(rimp);
  in.limp = std::move(limp);
  in.name = A.name();
  auto res = validate(std::move(in));
  if (!res.ok()) throw FatalInconsistency("relabeling broke validity");
  return std::move(*res.hoop);
}

namespace {

std::string serialize_with(FiniteHoop const& A, std::vector<Elem> const& perm) {
  int n = A.size();
  std::string s;
  s.reserve(size_t(3 * n * n) + 1);
  s.push_back(char(n));
  // permuted tables, row-major: T'(perm x, perm y) = perm T(x, y); emit
  // rows of the permuted table in index order
  std::vector<Elem> inv(static_cast<size_t>(n));
  for (Elem x = 0; x < n; ++x) inv[size_t(perm[size_t(x)])] = x;
  auto emit = [&](auto&& get) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        s.push_back(char(perm[size_t(get(inv[size_t(x)], inv[size_t(y)]))]));
  };
  emit([&](Elem x, Elem y) { return A.prod(x, y); });
  emit([&](Elem x, Elem y) { return A.rimp(x, y); });
  emit([&](Elem x, Elem y) { return A.limp(x, y); });
  return s;
}

}  // namespace

CanonicalKey canonical_form(FiniteHoop const& A) {
  int n = A.size();
  std::vector<Elem> rest;  // non-unit elements
  for (Elem x = 0; x < n; ++x)
    if (x != A.unit()) rest.push_back(x);
  std::vector<Elem> perm(static_cast<size_t>(n));
  std::string best;
  std::vector<int> order(rest.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    perm[size_t(A.unit())] = n - 1;
    for (size_t i = 0; i < rest.size(); ++i) perm[size_t(rest[i])] = Elem(order[i]);
    std::string s = serialize_with(A, perm);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::string canonical_key_hash(CanonicalKey const& key) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool are_isomorphic(FiniteHoop const& A, FiniteHoop const& B) {
  int n = A.size();
  if (n != B.size()) return false;
  // order/idempotence profile per element; a bijection must match it
  auto profile = [](FiniteHoop const& M, Elem x) {
    return std::array<int, 3>{std::popcount(M.down_mask(x)), std::popcount(M.up_mask(x)),
                              M.prod(x, x) == x ? 1 : 0};
  };
  std::vector<std::array<int, 3>> pa(static_cast<size_t>(n)), pb(static_cast<size_t>(n));
  for (Elem x = 0; x < n; ++x) {
    pa[size_t(x)] = profile(A, x);
    pb[size_t(x)] = profile(B, x);
  }
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<Elem> map(static_cast<size_t>(n), -1), used(static_cast<size_t>(n), 0);
  map[size_t(A.unit())] = B.unit();
  used[size_t(B.unit())] = 1;
  if (pa[size_t(A.unit())] != pb[size_t(B.unit())]) return false;
  std::vector<Elem> todo;
  for (Elem x = 0; x < n; ++x)
    if (x != A.unit()) todo.push_back(x);

  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == todo.size()) return true;
    Elem x = todo[i];
    for (Elem y = 0; y < n; ++y) {
      if (used[size_t(y)] || pa[size_t(x)] != pb[size_t(y)]) continue;
      map[size_t(x)] = y;
      used[size_t(y)] = 1;
      bool consistent = true;
      for (Elem z = 0; z < n && consistent; ++z) {
        if (map[size_t(z)] < 0) continue;
        Elem mz = map[size_t(z)];
        if (A.leq(x, z) != B.leq(y, mz) || A.leq(z, x) != B.leq(mz, y)) consistent = false;
        auto chk = [&](Elem p, Elem q) {
          Elem img = map[size_t(p)];
          return img < 0 || img == q;
        };
        if (consistent)
          consistent = chk(A.prod(x, z), B.prod(y, mz)) && chk(A.prod(z, x), B.prod(mz, y))
                       && chk(A.rimp(x, z), B.rimp(y, mz)) && chk(A.rimp(z, x), B.rimp(mz, y))
                       && chk(A.limp(x, z), B.limp(y, mz)) && chk(A.limp(z, x), B.limp(mz, y));
      }
      if (consistent && go(i + 1)) return true;
      map[size_t(x)] = -1;
      used[size_t(y)] = 0;
    }
    return false;
  };
  if (!go(0)) return false;
  // the partial checks above skip images not yet assigned; confirm fully
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (map[size_t(A.prod(x, y))] != B.prod(map[size_t(x)], map[size_t(y)])) return false;
      if (map[size_t(A.rimp(x, y))] != B.rimp(map[size_t(x)], map[size_t(y)])) return false;
      if (map[size_t(A.limp(x, y))] != B.limp(map[size_t(x)], map[size_t(y)])) return false;
    }
  return true;
}

namespace {

// Meet-semilattice orders with top at n-1, as downward masks.
struct OrderSearch {
  int n;
  std::vector<std::vector<Mask>> found;  // each entry: down[x] per x

  void run() {
    std::vector<Mask> down(static_cast<size_t>(n));
    down[size_t(n - 1)] = full_mask(n);
    assign(0, down);
  }

  void assign(Elem x, std::vector<Mask>& down) {
    if (x == n - 1) {
      if (meets_ok(down)) found.push_back(down);
      return;
    }
    Mask const candidates = full_mask(n - 1);  // the top is above, never below
    for (Mask d = 0; d <= candidates; ++d) {
      if (!mask_has(d, x)) continue;
      if (d & ~candidates) continue;
      bool ok = true;
      for (Elem y = 0; y < x && ok; ++y) {
        bool y_below_x = mask_has(d, y);
        bool x_below_y = mask_has(down[size_t(y)], x);
        if (y_below_x && x_below_y) ok = false;                    // antisymmetry
        if (ok && y_below_x && (down[size_t(y)] & ~d)) ok = false; // transitivity
        if (ok && x_below_y && (d & ~down[size_t(y)])) ok = false;
      }
      if (!ok) continue;
      down[size_t(x)] = d;
      assign(x + 1, down);
    }
    down[size_t(x)] = 0;
  }

  bool meets_ok(std::vector<Mask> const& down) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y <= x; ++y) {
        Mask lower = down[size_t(x)] & down[size_t(y)];
        if (lower == 0) return false;
        bool has_greatest = false;
        for (Elem m = 0; m < n && !has_greatest; ++m)
          if (mask_has(lower, m) && (lower & ~down[size_t(m)]) == 0) has_greatest = true;
        if (!has_greatest) return false;
      }
    return true;
  }
};

// Fill product tables over one order.
struct TableSearch {
  int n;
  std::vector<Mask> down, up;
  SquareTable meet;
  std::vector<std::pair<Elem, Elem>> cells;  // free cells (both non-unit)
  SquareTable prod;
  std::vector<char> filled;
  std::function<void(SquareTable const&)> sink;

  explicit TableSearch(std::vector<Mask> const& downsets)
      : n(int(downsets.size())), down(downsets), up(downsets.size(), 0),
        meet(n), prod(n), filled(size_t(n) * size_t(n), 0) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (mask_has(down[size_t(y)], x)) up[size_t(x)] |= bit_of(y);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        Mask lower = down[size_t(x)] & down[size_t(y)];
        for (Elem m = 0; m < n; ++m)
          if (mask_has(lower, m) && (lower & ~down[size_t(m)]) == 0) {
            meet(x, y) = m;
            break;
          }
      }
    Elem const u = n - 1;
    for (Elem x = 0; x < n; ++x) {
      set(x, u, x);
      set(u, x, x);
    }
    for (Elem x = 0; x < u; ++x)
      for (Elem y = 0; y < u; ++y) cells.emplace_back(x, y);
  }

  void set(Elem x, Elem y, Elem v) {
    prod(x, y) = v;
    filled[size_t(x) * size_t(n) + size_t(y)] = 1;
  }
  void unset(Elem x, Elem y) { filled[size_t(x) * size_t(n) + size_t(y)] = 0; }
  bool is_filled(Elem x, Elem y) const { return filled[size_t(x) * size_t(n) + size_t(y)]; }
  bool leq(Elem a, Elem b) const { return mask_has(up[size_t(a)], b); }

  bool monotone_ok(Elem x, Elem y, Elem v) const {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!is_filled(a, b)) continue;
        if (leq(a, x) && leq(b, y) && !leq(prod(a, b), v)) return false;
        if (leq(x, a) && leq(y, b) && !leq(v, prod(a, b))) return false;
      }
    return true;
  }

  bool assoc_ok() const {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!is_filled(a, b)) continue;
        for (Elem c = 0; c < n; ++c) {
          if (!is_filled(b, c)) continue;
          if (!is_filled(prod(a, b), c) || !is_filled(a, prod(b, c))) continue;
          if (prod(prod(a, b), c) != prod(a, prod(b, c))) return false;
        }
      }
    return true;
  }

  void fill(size_t i) {
    if (i == cells.size()) {
      sink(prod);
      return;
    }
    auto [x, y] = cells[i];
    Mask allowed = down[size_t(meet(x, y))];
    for (Elem v = 0; v < n; ++v) {
      if (!mask_has(allowed, v)) continue;
      if (!monotone_ok(x, y, v)) continue;
      set(x, y, v);
      if (assoc_ok()) fill(i + 1);
      unset(x, y);
    }
  }
};

}  // namespace

std::vector<FiniteHoop> enumerate_hoops(EnumOptions const& opts) {
  if (opts.size < 1) throw ContractError("enumerate_hoops: size must be >= 1");
  if (opts.size > 7) throw ContractError("enumerate_hoops: sizes beyond 7 are not supported");
  int n = opts.size;

  OrderSearch orders{n, {}};
  orders.run();

  // collect candidates; key -> representative (or all labeled variants)
  std::vector<FiniteHoop> labeled;
  std::map<CanonicalKey, FiniteHoop> classes;

  for (auto const& down : orders.found) {
    TableSearch ts(down);
    std::vector<Mask> ups = ts.up;
    ts.sink = [&](SquareTable const& prod) {
      auto arrows = derive_arrows(prod, ups);
      if (!arrows) return;
      HoopInput in;
      in.size = n;
      in.unit = n - 1;
      in.prod = prod;
      in.rimp = arrows->rimp;
      in.limp = arrows->limp;
      auto res = validate(std::move(in));
      if (!res.ok()) return;
      FiniteHoop M = std::move(*res.hoop);
      if (!opts.restrict.admits(classify(M))) return;
      if (opts.up_to_iso) {
        classes.emplace(canonical_form(M), std::move(M));
      } else {
        labeled.push_back(std::move(M));
      }
    };
    ts.fill(0);
  }

  std::vector<FiniteHoop> out;
  if (opts.up_to_iso) {
    for (auto& [key, M] : classes) {
      out.push_back(std::move(M));
      if (opts.limit && (long long)out.size() >= *opts.limit) break;
    }
  } else {
    std::vector<std::pair<std::pair<CanonicalKey, std::string>, size_t>> keyed;
    std::vector<Elem> id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    for (size_t i = 0; i < labeled.size(); ++i)
      keyed.push_back({{canonical_form(labeled[i]), serialize_with(labeled[i], id)}, i});
    std::sort(keyed.begin(), keyed.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
    for (auto const& [k, i] : keyed) {
      out.push_back(std::move(labeled[i]));
      if (opts.limit && (long long)out.size() >= *opts.limit) break;
    }
  }
  return out;
}

}  // namespace hoops

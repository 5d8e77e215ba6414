#include "oracle.hpp"

#include <functional>
#include <set>

#include "hoops/enumerate.hpp"

namespace hoops::testing {

namespace {

struct MonoidSearch {
  int n;
  SquareTable prod;
  std::vector<char> filled;
  std::function<void(SquareTable const&)> sink;

  explicit MonoidSearch(int size) : n(size), prod(size), filled(size_t(size) * size, 0) {
    Elem const u = n - 1;
    for (Elem x = 0; x < n; ++x) {
      put(x, u, x);
      put(u, x, x);
    }
  }

  void put(Elem x, Elem y, Elem v) {
    prod(x, y) = v;
    filled[size_t(x) * size_t(n) + size_t(y)] = 1;
  }
  void drop(Elem x, Elem y) { filled[size_t(x) * size_t(n) + size_t(y)] = 0; }
  bool have(Elem x, Elem y) const { return filled[size_t(x) * size_t(n) + size_t(y)]; }

  bool assoc_ok() const {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!have(a, b)) continue;
        for (Elem c = 0; c < n; ++c) {
          if (!have(b, c)) continue;
          if (!have(prod(a, b), c) || !have(a, prod(b, c))) continue;
          if (prod(prod(a, b), c) != prod(a, prod(b, c))) return false;
        }
      }
    return true;
  }

  void fill(Elem x, Elem y) {
    if (x == n - 1) {
      sink(prod);
      return;
    }
    Elem nx = x, ny = y + 1;
    if (ny == n - 1) {
      nx = x + 1;
      ny = 0;
    }
    for (Elem v = 0; v < n; ++v) {
      put(x, y, v);
      if (assoc_ok()) fill(nx, ny);
      drop(x, y);
    }
  }

  void run() {
    if (n == 1) {
      sink(prod);
      return;
    }
    fill(0, 0);
  }
};

}  // namespace

std::vector<FiniteHoop> brute_force_hoops(int size) {
  std::vector<FiniteHoop> out;
  MonoidSearch ms(size);
  int const n = size;
  ms.sink = [&](SquareTable const& prod) {
    // divisibility order: x <= y iff x = y*w for some w; the left-handed
    // version must produce the same relation
    std::vector<Mask> up(size_t(n), 0);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        bool right = false, left = false;
        for (Elem w = 0; w < n; ++w) {
          if (prod(y, w) == x) right = true;
          if (prod(w, y) == x) left = true;
        }
        if (right != left) return;
        if (right) up[size_t(x)] |= bit_of(y);
      }
    // partial order sanity before handing to the validator
    for (Elem x = 0; x < n; ++x) {
      if (!mask_has(up[size_t(x)], x)) return;
      for (Elem y = 0; y < n; ++y) {
        if (x != y && mask_has(up[size_t(x)], y) && mask_has(up[size_t(y)], x)) return;
        if (mask_has(up[size_t(x)], y) && (up[size_t(y)] & ~up[size_t(x)])) return;
      }
    }
    auto arrows = derive_arrows(prod, up);
    if (!arrows) return;
    HoopInput in;
    in.size = n;
    in.unit = n - 1;
    in.prod = prod;
    in.rimp = arrows->rimp;
    in.limp = arrows->limp;
    auto res = validate(std::move(in));
    if (res.ok()) out.push_back(std::move(*res.hoop));
  };
  ms.run();
  return out;
}

BruteCounts brute_force_counts(int size) {
  auto hoops = brute_force_hoops(size);
  std::set<CanonicalKey> keys;
  for (auto const& M : hoops) keys.insert(canonical_form(M));
  return {static_cast<long long>(hoops.size()), static_cast<long long>(keys.size())};
}

}  // namespace hoops::testing

#include "hoops/holland.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace hoops {

int OmegaChain::segment_of(int p) const {
  for (size_t s = 0; s < segments.size(); ++s)
    if (p < offsets[s] + int(segments[s].classes.size())) return int(s);
  throw ContractError("point out of range");
}

Representation build_representation(FiniteHoop const& M) {
  if (!classify(M).basic) throw Inapplicable("build_representation: algebra is not basic");
  Representation R{M, {}, {}, {}};
  auto fs = all_filters(M);

  for (Elem g = 0; g < M.size(); ++g) {
    if (g == M.unit()) continue;
    auto vals = values_of(M, g, &fs);
    if (vals.empty()) throw FatalInconsistency("element below the unit has no value");
    Filter V = vals.front().value;  // first in bit-set order
    auto qs = class_structure(M, V, Side::right);
    if (!qs.total)
      throw FatalInconsistency("value quotient of a basic algebra is not a chain");
    // sort class ids ascending in the quotient order
    std::vector<int> ids(qs.classes.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = int(i);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return qs.cls_lt(a, b); });
    OmegaSegment seg;
    seg.g = g;
    seg.value = V;
    for (int id : ids) seg.classes.push_back(qs.classes[size_t(id)]);
    R.omega.offsets.push_back(R.omega.points);
    R.omega.points += int(seg.classes.size());
    R.omega.segments.push_back(std::move(seg));
  }

  auto class_index = [&](OmegaSegment const& seg, Elem x) {
    for (size_t c = 0; c < seg.classes.size(); ++c)
      if (mask_has(seg.classes[c], x)) return int(c);
    throw FatalInconsistency("element missing from a class partition");
  };

  for (Elem a = 0; a < M.size(); ++a) {
    MonotoneMap f{a, std::vector<int>(size_t(R.omega.points))};
    MonotoneMap r{a, std::vector<int>(size_t(R.omega.points))};
    for (size_t s = 0; s < R.omega.segments.size(); ++s) {
      auto const& seg = R.omega.segments[s];
      for (size_t c = 0; c < seg.classes.size(); ++c) {
        Elem rep = std::countr_zero(seg.classes[c]);
        int fim = class_index(seg, M.prod(rep, a));
        int rim = class_index(seg, M.rimp(a, rep));
        // well-definedness across the whole class
        for (Elem x = 0; x < M.size(); ++x) {
          if (!mask_has(seg.classes[c], x)) continue;
          if (class_index(seg, M.prod(x, a)) != fim)
            throw FatalInconsistency("action is not well defined on classes");
          if (class_index(seg, M.rimp(a, x)) != rim)
            throw FatalInconsistency("residual is not well defined on classes");
        }
        f.images[size_t(R.omega.point(int(s), int(c)))] = R.omega.point(int(s), fim);
        r.images[size_t(R.omega.point(int(s), int(c)))] = R.omega.point(int(s), rim);
      }
    }
    R.maps.push_back(std::move(f));
    R.residuals.push_back(std::move(r));
  }
  return R;
}

void RepresentationReport::expect(bool ok, std::string what) {
  if (!ok) {
    pass = false;
    failures.push_back(std::move(what));
  }
}

namespace {

bool pointwise_leq(MonotoneMap const& f, MonotoneMap const& g) {
  for (size_t p = 0; p < f.images.size(); ++p)
    if (f.images[p] > g.images[p]) return false;
  return true;
}

bool is_monotone(std::vector<int> const& images) {
  for (size_t p = 1; p < images.size(); ++p)
    if (images[p] < images[p - 1]) return false;
  return true;
}

// all monotone self-maps of a chain of m points
void each_monotone(int m, std::vector<int>& cur, std::function<void(std::vector<int> const&)> const& fn) {
  if (int(cur.size()) == m) {
    fn(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v < m; ++v) {
    cur.push_back(v);
    each_monotone(m, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

RepresentationReport verify_representation(Representation const& R) {
  RepresentationReport rep;
  FiniteHoop const& M = R.algebra;
  int n = M.size();
  int pts = R.omega.points;

  auto wit = [](std::string what, long long a, long long b = -1, long long c = -1) {
    std::ostringstream os;
    os << what << " at (" << a;
    if (b >= 0) os << "," << b;
    if (c >= 0) os << "," << c;
    os << ")";
    return os.str();
  };

  // every map and residual is monotone and segment-preserving
  for (Elem a = 0; a < n; ++a) {
    rep.expect(is_monotone(R.maps[size_t(a)].images), wit("map not monotone", a));
    rep.expect(is_monotone(R.residuals[size_t(a)].images), wit("residual not monotone", a));
    for (int p = 0; p < pts; ++p) {
      rep.expect(R.omega.segment_of(R.maps[size_t(a)].images[size_t(p)]) == R.omega.segment_of(p),
                 wit("map leaves its segment", a, p));
      rep.expect(R.omega.segment_of(R.residuals[size_t(a)].images[size_t(p)])
                     == R.omega.segment_of(p),
                 wit("residual leaves its segment", a, p));
    }
  }

  // (i) unit acts as the identity
  for (int p = 0; p < pts; ++p)
    rep.expect(R.maps[size_t(M.unit())].images[size_t(p)] == p, wit("unit map not identity", p));

  // (ii) order embedding, both directions, hence injectivity
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      bool pw = pointwise_leq(R.maps[size_t(a)], R.maps[size_t(b)]);
      rep.expect(pw == M.leq(a, b), wit("order embedding fails", a, b));
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      rep.expect(R.maps[size_t(a)].images != R.maps[size_t(b)].images,
                 wit("representation not injective", a, b));

  // (iii) composition realizes the product (left factor first)
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (int p = 0; p < pts; ++p) {
        int q = R.maps[size_t(b)].images[size_t(R.maps[size_t(a)].images[size_t(p)])];
        rep.expect(q == R.maps[size_t(M.prod(a, b))].images[size_t(p)],
                   wit("composition mismatch", a, b, p));
      }

  // (iv)/(v) pointwise join and meet
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (int p = 0; p < pts; ++p) {
        int fa = R.maps[size_t(a)].images[size_t(p)], fb = R.maps[size_t(b)].images[size_t(p)];
        rep.expect(std::max(fa, fb) == R.maps[size_t(M.join(a, b))].images[size_t(p)],
                   wit("pointwise join mismatch", a, b, p));
        rep.expect(std::min(fa, fb) == R.maps[size_t(M.meet(a, b))].images[size_t(p)],
                   wit("pointwise meet mismatch", a, b, p));
      }

  // residual laws: the adjunction and the three derived identities
  for (Elem a = 0; a < n; ++a) {
    auto const& f = R.maps[size_t(a)].images;
    auto const& fs = R.residuals[size_t(a)].images;
    for (int p = 0; p < pts; ++p)
      for (int q = 0; q < pts; ++q)
        rep.expect((f[size_t(p)] <= q) == (p <= fs[size_t(q)]), wit("adjunction fails", a, p, q));
    for (int p = 0; p < pts; ++p) {
      rep.expect(p <= fs[size_t(f[size_t(p)])], wit("e <= f f* fails", a, p));
      rep.expect(f[size_t(fs[size_t(p)])] <= p, wit("f* f <= e fails", a, p));
      rep.expect(f[size_t(fs[size_t(f[size_t(p)])])] == f[size_t(p)],
                 wit("f = f f* f fails", a, p));
    }
  }

  // uniqueness of the residual among all monotone self-maps (small chains)
  if (pts > 0 && pts <= 8) {
    for (Elem a = 0; a < n; ++a) {
      auto const& f = R.maps[size_t(a)].images;
      int count = 0;
      std::vector<int> cur;
      each_monotone(pts, cur, [&](std::vector<int> const& g) {
        for (int p = 0; p < pts; ++p)
          for (int q = 0; q < pts; ++q)
            if ((f[size_t(p)] <= q) != (p <= g[size_t(q)])) return;
        ++count;
      });
      rep.expect(count == 1, wit("residual not unique", a, count));
    }
  }
  return rep;
}

std::string export_representation(Representation const& R, ExportFormat format, Elem highlight) {
  FiniteHoop const& M = R.algebra;
  if (highlight < 0) highlight = M.bottom();
  if (highlight >= M.size()) throw InputError("export_representation: element out of range");

  if (format == ExportFormat::json) {
    nlohmann::json j;
    j["algebra"] = M.name();
    j["points"] = R.omega.points;
    j["segments"] = nlohmann::json::array();
    for (auto const& seg : R.omega.segments) {
      nlohmann::json js;
      js["g"] = seg.g;
      nlohmann::json classes = nlohmann::json::array();
      for (Mask c : seg.classes) {
        nlohmann::json cls = nlohmann::json::array();
        for (Elem x = 0; x < M.size(); ++x)
          if (mask_has(c, x)) cls.push_back(x);
        classes.push_back(std::move(cls));
      }
      js["value"] = nlohmann::json::array();
      for (Elem x = 0; x < M.size(); ++x)
        if (seg.value.contains(x)) js["value"].push_back(x);
      js["classes"] = std::move(classes);
      j["segments"].push_back(std::move(js));
    }
    j["maps"] = nlohmann::json::array();
    for (Elem a = 0; a < M.size(); ++a) {
      nlohmann::json jm;
      jm["element"] = a;
      jm["images"] = R.maps[size_t(a)].images;
      jm["residual"] = R.residuals[size_t(a)].images;
      j["maps"].push_back(std::move(jm));
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "digraph omega {\n  rankdir=BT;\n";
  for (size_t s = 0; s < R.omega.segments.size(); ++s) {
    auto const& seg = R.omega.segments[s];
    os << "  subgraph cluster_" << s << " {\n";
    os << "    label=\"segment g=" << seg.g << "\";\n";
    for (size_t c = 0; c < seg.classes.size(); ++c) {
      os << "    p" << R.omega.point(int(s), int(c)) << " [label=\"{";
      bool first = true;
      for (Elem x = 0; x < M.size(); ++x)
        if (mask_has(seg.classes[c], x)) {
          os << (first ? "" : ",") << x;
          first = false;
        }
      os << "}\"];\n";
    }
    for (size_t c = 0; c + 1 < seg.classes.size(); ++c)
      os << "    p" << R.omega.point(int(s), int(c)) << " -> p"
         << R.omega.point(int(s), int(c) + 1) << ";\n";
    os << "  }\n";
  }
  for (int p = 0; p < R.omega.points; ++p)
    os << "  p" << p << " -> p" << R.maps[size_t(highlight)].images[size_t(p)]
       << " [style=dashed, color=blue, label=\"f(" << highlight << ")\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hoops

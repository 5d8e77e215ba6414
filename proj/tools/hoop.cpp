// Command line front end: load/save algebras, dispatch to the library,
// render reports.  Exit codes: 0 pass or normal output, 1 a checked
// property failed or a counterexample was found, 2 input errors.

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hoops/cones.hpp"
#include "hoops/enumerate.hpp"
#include "hoops/filters.hpp"
#include "hoops/holland.hpp"
#include "hoops/io.hpp"
#include "hoops/normal_valued.hpp"
#include "hoops/rdp.hpp"
#include "hoops/report.hpp"

namespace {

using namespace hoops;

struct Global {
  bool json = false;
  std::uint64_t seed = 0;
  int nmax = 0;  // 0: use |M|
};

int emit(Report rep, Global const& g, std::chrono::steady_clock::time_point t0) {
  rep.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << render(rep, g.json ? RenderMode::json : RenderMode::text);
  return rep.exit_code();
}

std::string filter_str(FiniteHoop const& M, Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Elem x = 0; x < M.size(); ++x)
    if (mask_has(m, x)) {
      os << (first ? "" : ",") << x;
      first = false;
    }
  os << '}';
  return os.str();
}

int cmd_check(std::string const& path, Global const& g) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.subject = "check " + path;
  auto res = validate(parse_algebra_input(read_file(path), path));
  if (res.ok()) {
    rep.status = Report::Status::pass;
    rep.detail = "  size " + std::to_string(res.value().size()) + "\n";
  } else {
    rep.status = Report::Status::fail;
    for (auto const& v : res.violations)
      rep.witnesses.push_back({"axiom " + v.axiom, {v.x, v.y, v.z}, v.detail});
  }
  return emit(std::move(rep), g, t0);
}

int cmd_classify(std::string const& path, Global const& g) {
  auto t0 = std::chrono::steady_clock::now();
  FiniteHoop M = load_algebra(path);
  ClassFlags f = classify(M);
  Report rep;
  rep.subject = "classify " + path;
  rep.status = Report::Status::pass;
  nlohmann::json j;
  j["bounded"] = f.bounded;
  j["commutative"] = f.commutative;
  j["cancellative"] = f.cancellative;
  j["prelinear"] = f.prelinear;
  j["basic"] = f.basic;
  j["good"] = f.good;
  j["eq64"] = f.eq64;
  j["pseudoBL"] = f.pseudo_bl;
  j["lattice"] = f.lattice;
  rep.data_json = j.dump();
  std::ostringstream os;
  for (auto const& [k, v] : j.items()) os << "  " << k << ": " << (v.get<bool>() ? "yes" : "no") << '\n';
  rep.detail = os.str();
  return emit(std::move(rep), g, t0);
}

int cmd_filters(std::string const& path, bool primes, int values_g, bool min_primes,
                bool lattice, Global const& g) {
  auto t0 = std::chrono::steady_clock::now();
  FiniteHoop M = load_algebra(path);
  auto fs = all_filters(M);
  Report rep;
  rep.subject = "filters " + path;
  rep.status = Report::Status::pass;
  nlohmann::json j;
  std::ostringstream os;
  j["count"] = fs.size();
  os << "  " << fs.size() << " filters\n";
  {
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& F : fs) {
      arr.push_back(F.elements);
      os << "  " << filter_str(M, F.elements) << (is_normal_filter(M, F) ? " normal" : "");
      if (F.elements != M.all()) {
        auto pr = prime_tests(M, F, &fs);
        os << (pr.all_yes() ? " prime" : "");
      }
      os << '\n';
    }
    j["filters"] = std::move(arr);
  }
  if (primes) {
    rep.anchors.push_back("PROP43");
    nlohmann::json arr = nlohmann::json::array();
    os << "  prime condition reports:\n";
    for (auto const& F : fs) {
      if (F.elements == M.all()) continue;
      auto pr = prime_tests(M, F, &fs);
      nlohmann::json jf;
      jf["filter"] = F.elements;
      jf["agree"] = pr.agree;
      os << "    " << filter_str(M, F.elements) << ":";
      for (auto const& c : pr.conditions) {
        bool yes = c.result == PrimeReport::Tri::yes;
        jf[c.label] = yes;
        os << ' ' << c.label << '=' << (yes ? 'y' : 'n');
      }
      os << (pr.agree ? "" : "  [conditions disagree]") << '\n';
      arr.push_back(std::move(jf));
      if (classify(M).basic && !pr.agree) rep.status = Report::Status::fail;
    }
    j["primes"] = std::move(arr);
  }
  if (values_g >= 0) {
    if (values_g >= M.size() || values_g == M.unit())
      throw InputError("--values: element must be < size and below the unit");
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& rec : values_of(M, values_g, &fs)) {
      nlohmann::json jv;
      jv["value"] = rec.value.elements;
      jv["cover"] = rec.cover.elements;
      os << "  value of " << values_g << ": " << filter_str(M, rec.value.elements) << " cover "
         << filter_str(M, rec.cover.elements) << '\n';
      arr.push_back(std::move(jv));
    }
    j["values"] = std::move(arr);
  }
  if (min_primes) {
    rep.anchors.push_back("REMARK64");
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& P : minimal_primes(M, &fs)) {
      arr.push_back(P.elements);
      os << "  minimal prime " << filter_str(M, P.elements) << '\n';
    }
    j["minimal_primes"] = std::move(arr);
  }
  if (lattice) {
    rep.anchors.push_back("PROP42");
    auto lat = filter_lattice(M);
    j["distributive"] = lat.distributive;
    j["family_law"] = lat.family_law;
    j["families_checked"] = lat.families_checked;
    os << "  lattice distributive: " << (lat.distributive ? "yes" : "no") << ", family law: "
       << (lat.family_law ? "yes" : "no") << " (" << lat.families_checked << " families)\n";
    if (!lat.distributive || !lat.family_law) rep.status = Report::Status::fail;
  }
  rep.data_json = j.dump();
  rep.detail = os.str();
  return emit(std::move(rep), g, t0);
}

int cmd_rdp(std::string const& path, std::vector<int> const& witness, bool verify, Global const& g) {
  auto t0 = std::chrono::steady_clock::now();
  FiniteHoop M = load_algebra(path);
  Report rep;
  rep.subject = "rdp " + path;
  rep.status = Report::Status::pass;
  nlohmann::json j;
  std::ostringstream os;
  if (!witness.empty()) {
    if (witness.size() != 3) throw InputError("--witness expects three element indices");
    auto w = rdp_witness(M, witness[0], witness[1], witness[2]);
    j["witness"] = {{"a", w.a}, {"b", w.b}, {"c", w.c}, {"b1", w.b_prime}, {"c1", w.c_prime}};
    os << "  a=" << w.a << " b=" << w.b << " c=" << w.c << "  ->  b1=" << w.b_prime
       << " c1=" << w.c_prime << '\n';
  }
  if (verify || witness.empty()) {
    auto r = verify_rdp(M);
    j["checked"] = r.checked;
    j["nontrivial"] = r.nontrivial;
    os << "  " << r.checked << " triples checked (" << r.nontrivial << " nontrivial)\n";
    if (!r.pass) {
      rep.status = Report::Status::fail;
      rep.witnesses.push_back({"rdp", {r.failure->a, r.failure->b, r.failure->c}, ""});
    }
  }
  rep.data_json = j.dump();
  rep.detail = os.str();
  return emit(std::move(rep), g, t0);
}

int cmd_normal_valued(std::string const& path, std::string const& method, Global const& g) {
  auto t0 = std::chrono::steady_clock::now();
  FiniteHoop M = load_algebra(path);
  Report rep;
  rep.subject = "normal-valued " + path;
  nlohmann::json j;
  std::ostringstream os;
  try {
    bool want_direct = method == "direct" || method == "both";
    bool want_eq = method == "equational" || method == "both";
    std::optional<bool> direct, equational;
    if (want_direct) {
      rep.anchors.push_back("COR69");
      auto r = is_normal_valued_direct(M);
      direct = r.holds;
      j["direct"] = r.holds;
      os << "  direct: " << (r.holds ? "yes" : "no") << '\n';
      if (!r.holds)
        rep.witnesses.push_back({"conjugate escapes value", {r.g, r.f, r.v}, ""});
    }
    if (want_eq) {
      auto r = equational_basis_check(M, g.nmax);
      equational = r.holds;
      j["equational"] = r.holds;
      os << "  equational: " << (r.holds ? "yes" : "no") << '\n';
      if (!r.holds)
        rep.witnesses.push_back({"schema " + std::to_string(r.which), {r.wx, r.wy, r.wn}, ""});
    }
    if (direct && equational && *direct != *equational)
      throw FatalInconsistency("direct and equational characterizations disagree");
    bool verdict = direct ? *direct : *equational;
    rep.status = verdict ? Report::Status::pass : Report::Status::fail;
  } catch (Inapplicable const& e) {
    rep.status = Report::Status::inapplicable;
    rep.detail = std::string("  ") + e.what() + "\n";
    return emit(std::move(rep), g, t0);
  }
  rep.data_json = j.dump();
  rep.detail = os.str();
  return emit(std::move(rep), g, t0);
}

int cmd_check_claim(std::string const& path, std::string const& claim, Global const& g) {
  auto t0 = std::chrono::steady_clock::now();
  auto id = parse_claim(claim);
  if (!id) throw InputError("unknown claim id: " + claim);
  FiniteHoop M = load_algebra(path);
  auto res = check_claim(M, *id, g.nmax);
  Report rep;
  rep.subject = "check-claim " + claim + " " + path;
  rep.anchors.push_back(claim_name(*id));
  switch (res.status) {
    case ClaimResult::Status::pass: rep.status = Report::Status::pass; break;
    case ClaimResult::Status::fail:
      rep.status = Report::Status::fail;
      rep.witnesses.push_back({"claim", {}, res.witness});
      break;
    case ClaimResult::Status::inapplicable:
      rep.status = Report::Status::inapplicable;
      rep.detail = "  hypothesis not met: " + res.hypothesis + "\n";
      break;
  }
  nlohmann::json j;
  j["claim"] = claim_name(*id);
  j["statement"] = claim_statement(*id);
  rep.data_json = j.dump();
  return emit(std::move(rep), g, t0);
}

int cmd_holland(std::string const& path, std::string const& out, bool verify, Global const& g) {
  auto t0 = std::chrono::steady_clock::now();
  FiniteHoop M = load_algebra(path);
  Report rep;
  rep.subject = "holland " + path;
  try {
    auto R = build_representation(M);
    if (!out.empty()) {
      if (out != "json" && out != "dot") throw InputError("--out expects json or dot");
      std::cout << export_representation(R, out == "json" ? ExportFormat::json
                                                          : ExportFormat::dot);
      if (!verify) return 0;
    }
    if (verify || out.empty()) {
      auto v = verify_representation(R);
      rep.status = v.pass ? Report::Status::pass : Report::Status::fail;
      std::ostringstream os;
      os << "  chain of " << R.omega.points << " points in " << R.omega.segments.size()
         << " segments\n";
      for (auto const& fail : v.failures) os << "  " << fail << '\n';
      rep.detail = os.str();
    }
  } catch (Inapplicable const& e) {
    rep.status = Report::Status::inapplicable;
    rep.detail = std::string("  ") + e.what() + "\n";
  }
  return emit(std::move(rep), g, t0);
}

int cmd_q2(int max_size, Global const& g) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.subject = "q2-search sizes 1.." + std::to_string(max_size);
  rep.anchors = {"EQ61", "COR69"};
  std::vector<FiniteHoop> stream;
  for (int s = 1; s <= max_size; ++s) {
    EnumOptions opts;
    opts.size = s;
    opts.up_to_iso = true;
    for (auto& M : enumerate_hoops(opts)) stream.push_back(std::move(M));
  }
  auto res = q2_search(stream, g.nmax);
  nlohmann::json j;
  j["scanned"] = res.scanned;
  j["basic"] = res.basic_scanned;
  j["normal_valued_true"] = res.normal_valued_true;
  j["normal_valued_false"] = res.normal_valued_false;
  j["candidates"] = nlohmann::json::array();
  for (auto const& M : res.candidates)
    j["candidates"].push_back(nlohmann::json::parse(to_json(M)));
  j["fatal"] = res.fatal.size();
  std::ostringstream os;
  os << "  scanned " << res.scanned << " algebras (" << res.basic_scanned << " basic; "
     << res.normal_valued_false << " not normal-valued)\n";
  os << "  candidates: " << res.candidates.size() << ", fatal inconsistencies: "
     << res.fatal.size() << '\n';
  rep.detail = os.str();
  rep.data_json = j.dump();
  rep.status = (res.candidates.empty() && res.fatal.empty()) ? Report::Status::pass
                                                             : Report::Status::fail;
  for (auto const& M : res.fatal)
    rep.witnesses.push_back({"fatal-inconsistency", {M.size()}, "direct and equational disagree"});
  for (auto const& M : res.candidates)
    rep.witnesses.push_back({"question-2-candidate", {M.size()}, canonical_key_hash(canonical_form(M))});
  return emit(std::move(rep), g, t0);
}

int cmd_enumerate(int size, bool basic, bool bounded, bool up_to_iso, bool count_only,
                  std::string const& out_dir, long long limit, Global const& g) {
  auto t0 = std::chrono::steady_clock::now();
  EnumOptions opts;
  opts.size = size;
  opts.up_to_iso = up_to_iso;
  opts.restrict.basic = basic;
  opts.restrict.bounded = bounded;
  if (limit > 0) opts.limit = limit;
  auto algebras = enumerate_hoops(opts);
  Report rep;
  rep.subject = "enumerate size " + std::to_string(size);
  rep.status = Report::Status::pass;
  nlohmann::json j;
  j["size"] = size;
  j["count"] = algebras.size();
  std::ostringstream os;
  os << "  " << algebras.size() << " algebra(s)\n";
  if (!count_only) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& M : algebras) {
      auto key = canonical_key_hash(canonical_form(M));
      M.set_name("hoop-" + std::to_string(size) + "-" + key);
      if (!out_dir.empty())
        save_algebra(M, out_dir + "/" + M.name() + ".json");
      auto f = classify(M);
      os << "  " << M.name() << (f.commutative ? " commutative" : " noncommutative")
         << (f.basic ? " basic" : "") << (f.prelinear ? " prelinear" : "") << '\n';
      if (g.json) arr.push_back(nlohmann::json::parse(to_json(M)));
    }
    if (g.json) j["algebras"] = std::move(arr);
  }
  rep.data_json = j.dump();
  rep.detail = os.str();
  return emit(std::move(rep), g, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite pseudo hoops"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json, "machine readable reports");
  app.add_option("--seed", g.seed, "seed for sampling commands")->default_val(0);
  app.add_option("--nmax", g.nmax, "override the power bound (default |M|)")->default_val(0);

  std::string path, claim, method = "both", out, out_dir;
  std::vector<int> witness;
  bool verify = false, primes = false, min_primes = false, lattice = false;
  int values_g = -1;

  auto* c_check = app.add_subcommand("check", "validate an algebra file");
  c_check->add_option("file", path)->required();

  auto* c_classify = app.add_subcommand("classify", "class predicates of an algebra");
  c_classify->add_option("file", path)->required();

  auto* c_filters = app.add_subcommand("filters", "filters, primes, values");
  c_filters->add_option("file", path)->required();
  c_filters->add_flag("--primes", primes, "per-condition primality reports");
  c_filters->add_option("--values", values_g, "all values of the given element");
  c_filters->add_flag("--minimal-primes", min_primes, "minimal prime filters");
  c_filters->add_flag("--lattice", lattice, "filter lattice distributivity report");

  auto* c_rdp = app.add_subcommand("rdp", "Riesz decomposition checks");
  c_rdp->add_option("file", path)->required();
  c_rdp->add_option("--witness", witness, "decomposition witness for a b c")->expected(3);
  c_rdp->add_flag("--verify", verify, "check every qualifying triple");

  auto* c_nv = app.add_subcommand("normal-valued", "normal-valued property");
  c_nv->add_option("file", path)->required();
  c_nv->add_option("--method", method, "direct|equational|both")
      ->check(CLI::IsMember({"direct", "equational", "both"}));

  auto* c_claim = app.add_subcommand("check-claim", "run one named claim checker");
  c_claim->add_option("file", path)->required();
  c_claim->add_option("--claim", claim, "claim id")->required();

  auto* c_holland = app.add_subcommand("holland", "chain representation");
  c_holland->add_option("file", path)->required();
  c_holland->add_option("--out", out, "emit the representation: json|dot");
  c_holland->add_flag("--verify", verify, "verify all representation properties");

  auto* c_enum = app.add_subcommand("enumerate", "all algebras of a size");
  int size = 1;
  bool basic = false, bounded = false, up_to_iso = false, count_only = false;
  long long limit = 0;
  c_enum->add_option("--size", size, "algebra size")->required();
  c_enum->add_flag("--basic", basic, "only basic algebras");
  c_enum->add_flag("--bounded", bounded, "only bounded algebras");
  c_enum->add_flag("--up-to-iso", up_to_iso, "one per isomorphism class");
  c_enum->add_flag("--count-only", count_only, "print the count only");
  c_enum->add_option("--out", out_dir, "write one JSON file per algebra");
  c_enum->add_option("--limit", limit, "emit at most this many");

  auto* c_q2 = app.add_subcommand("q2-search", "search for separating algebras");
  int max_size = 4;
  c_q2->add_option("--max-size", max_size, "largest size to scan")->required();

  auto* c_gen = app.add_subcommand("gen", "construct algebras and cones");
  c_gen->require_subcommand(1);
  std::string gen_out;
  int chain_n = 1;
  auto* g_luk = c_gen->add_subcommand("lukasiewicz", "bounded chain with cancellation cut at 0");
  g_luk->add_option("n", chain_n, "number of elements")->required();
  g_luk->add_option("-o,--output", gen_out, "output file");
  auto* g_god = c_gen->add_subcommand("godel", "idempotent chain");
  g_god->add_option("n", chain_n, "number of elements")->required();
  g_god->add_option("-o,--output", gen_out, "output file");
  std::string file_a, file_b;
  auto* g_prod = c_gen->add_subcommand("product", "componentwise direct product");
  g_prod->add_option("a", file_a)->required();
  g_prod->add_option("b", file_b)->required();
  g_prod->add_option("-o,--output", gen_out, "output file");
  auto* g_osum = c_gen->add_subcommand("osum", "ordinal sum, first summand below");
  g_osum->add_option("a", file_a)->required();
  g_osum->add_option("b", file_b)->required();
  g_osum->add_option("-o,--output", gen_out, "output file");
  auto* g_cone = c_gen->add_subcommand("cone", "sample properties of a Z^k cone");
  int dim = 2;
  std::string order = "pointwise", property = "EQ61";
  long long trials = 1000, box = 20;
  g_cone->add_option("--dim", dim, "number of coordinates")->required();
  g_cone->add_option("--order", order, "pointwise|lex")
      ->check(CLI::IsMember({"pointwise", "lex"}));
  g_cone->add_option("--sample", trials, "number of trials");
  g_cone->add_option("--box", box, "coordinate bound (draws from [-box, 0])");
  g_cone->add_option("--property", property, "one of the sampleable properties");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) return cmd_check(path, g);
    if (c_classify->parsed()) return cmd_classify(path, g);
    if (c_filters->parsed()) return cmd_filters(path, primes, values_g, min_primes, lattice, g);
    if (c_rdp->parsed()) return cmd_rdp(path, witness, verify, g);
    if (c_nv->parsed()) return cmd_normal_valued(path, method, g);
    if (c_claim->parsed()) return cmd_check_claim(path, claim, g);
    if (c_holland->parsed()) return cmd_holland(path, out, verify, g);
    if (c_enum->parsed())
      return cmd_enumerate(size, basic, bounded, up_to_iso, count_only, out_dir, limit, g);
    if (c_q2->parsed()) return cmd_q2(max_size, g);
    if (c_gen->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      auto save_or_print = [&](FiniteHoop const& M) {
        if (gen_out.empty()) std::cout << to_json(M);
        else save_algebra(M, gen_out);
        return 0;
      };
      if (g_luk->parsed()) return save_or_print(make_chain(ChainKind::lukasiewicz, chain_n));
      if (g_god->parsed()) return save_or_print(make_chain(ChainKind::godel, chain_n));
      if (g_prod->parsed())
        return save_or_print(direct_product(load_algebra(file_a), load_algebra(file_b)));
      if (g_osum->parsed())
        return save_or_print(ordinal_sum(load_algebra(file_a), load_algebra(file_b)));
      if (g_cone->parsed()) {
        auto prop = parse_sample_property(property);
        if (!prop) throw InputError("unknown property: " + property);
        ConeModel model{dim, order == "lex" ? ConeOrder::lex : ConeOrder::pointwise};
        auto sr = sample_check(model, *prop, trials, box, g.seed);
        Report rep;
        rep.subject = "cone dim " + std::to_string(dim) + " " + order + " "
                      + sample_property_name(*prop);
        rep.anchors.push_back(sample_property_name(*prop));
        nlohmann::json j;
        j["trials"] = sr.trials;
        j["passes"] = sr.passes;
        if (sr.inapplicable) {
          rep.status = Report::Status::inapplicable;
          rep.detail = "  needs a least element; cones are unbounded\n";
        } else if (sr.fatal) {
          rep.status = Report::Status::fail;
          std::vector<long long> flat;
          for (auto const& v : sr.counterexample)
            flat.insert(flat.end(), v.begin(), v.end());
          rep.witnesses.push_back({"fatal-inconsistency", flat, "abelian cone counterexample"});
        } else {
          rep.status = Report::Status::pass;
          rep.detail = "  " + std::to_string(sr.passes) + "/" + std::to_string(sr.trials)
                       + " trials passed\n";
        }
        rep.data_json = j.dump();
        return emit(std::move(rep), g, t0);
      }
    }
  } catch (InputError const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (ContractError const& e) {
    std::cerr << "contract error: " << e.what() << '\n';
    return 2;
  } catch (FatalInconsistency const& e) {
    std::cerr << "FATAL: " << e.what() << '\n';
    return 1;
  } catch (Inapplicable const& e) {
    std::cout << "inapplicable: " << e.what() << '\n';
    return 0;
  }
  return 2;
}

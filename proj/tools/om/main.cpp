// om: command line front end for the ordered matching toolkit.
//
// Subcommands mirror the library modules: patterns, clique, ramsey, count,
// extremal, random, verify. Identical invocations with identical seeds
// produce byte-identical output. Exit codes: 0 ok, 2 usage, 3 budget
// exceeded, 4 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "om/chains.hpp"
#include "om/clique.hpp"
#include "om/enumeration.hpp"
#include "om/errors.hpp"
#include "om/extremal.hpp"
#include "om/io.hpp"
#include "om/numeric.hpp"
#include "om/parallel.hpp"
#include "om/pattern.hpp"
#include "om/ramsey.hpp"
#include "om/random.hpp"
#include "om/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int threads = 0;
  std::uint64_t budget = om::kDefaultEnumerationBudget;
  std::string format = "text";
  std::string out;
};

std::string big_to_string(const om::BigInt& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

// Big integers print as numbers when they fit, strings otherwise.
Json big_json(const om::BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json((std::int64_t)v.convert_to<std::int64_t>());
  return Json(big_to_string(v));
}

void emit_scalar_text(std::ostream& os, const Json& v) {
  if (v.is_string())
    os << v.get<std::string>();
  else
    os << v.dump();
}

// text: "key: value" lines; csv: header + row(s) for arrays; json: dump.
void emit(const GlobalOpts& g, const Json& j) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) throw om::InvalidInput("cannot open output file " + g.out);
    os = &file;
  }
  if (g.format == "json") {
    *os << j.dump() << '\n';
    return;
  }
  if (g.format == "csv") {
    const Json& rows = j.contains("rows") ? j["rows"] : j;
    if (rows.is_array() && !rows.empty() && rows[0].is_object()) {
      bool first = true;
      for (auto& [k, v] : rows[0].items()) {
        *os << (first ? "" : ",") << k;
        first = false;
        (void)v;
      }
      *os << '\n';
      for (const auto& row : rows) {
        first = true;
        for (auto& [k, v] : row.items()) {
          *os << (first ? "" : ",");
          emit_scalar_text(*os, v);
          first = false;
          (void)k;
        }
        *os << '\n';
      }
    } else {
      *os << j.dump() << '\n';
    }
    return;
  }
  // text: artifact payloads print verbatim so the file loads back via -i
  for (const char* payload : {"matching", "graph", "points"}) {
    if (j.contains(payload) && j[payload].is_string()) {
      *os << j[payload].get<std::string>();
      return;
    }
  }
  for (auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      for (const auto& row : v) {
        bool first = true;
        for (auto& [rk, rv] : row.items()) {
          *os << (first ? "" : "  ") << rk << "=";
          emit_scalar_text(*os, rv);
          first = false;
        }
        *os << '\n';
      }
    } else {
      *os << k << ": ";
      emit_scalar_text(*os, v);
      *os << '\n';
    }
  }
}

om::OrderedMatching load_matching(const std::string& path) {
  if (path == "-") return om::read_matching(std::cin);
  std::ifstream f(path);
  if (!f) throw om::InvalidInput("cannot open " + path);
  return om::read_matching(f);
}

om::OrderedHypergraph load_hypergraph(const std::string& path) {
  if (path == "-") return om::read_hypergraph(std::cin);
  std::ifstream f(path);
  if (!f) throw om::InvalidInput("cannot open " + path);
  return om::read_hypergraph(f);
}

std::string matching_text(const om::OrderedMatching& m) {
  std::ostringstream ss;
  om::write_matching(ss, m);
  return ss.str();
}

std::string hypergraph_text(const om::OrderedHypergraph& g) {
  std::ostringstream ss;
  om::write_hypergraph(ss, g);
  return ss.str();
}

Json certificate_json(const om::OrderedMatching& m, const om::Pattern& p,
                      const om::CliqueCertificate& cert) {
  Json j;
  j["pattern"] = p.word();
  j["indices"] = cert.edge_indices;
  j["size"] = cert.size();
  j["verified"] = om::verify_certificate(m, cert);  // independent checker
  return j;
}

Json pattern_row(const om::Pattern& p) {
  Json row;
  row["word"] = p.word();
  row["weak"] = om::weak_pattern(p).letters();
  row["signature"] = om::signature_of(om::weak_pattern(p)).to_string();
  const bool coll = om::is_collectable(p);
  row["collectable"] = coll;
  row["r_partite"] = om::is_r_partite(p);
  if (coll) {
    std::string t;
    for (int h : om::pattern_type(p)) t += (t.empty() ? "" : "+") + std::to_string(h);
    row["type"] = t;
  }
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered r-matching toolkit"};
  app.fallthrough();  // global flags are accepted after subcommands
  app.require_subcommand(1);
  GlobalOpts g;
  if (const char* env = std::getenv("OM_BUDGET")) g.budget = std::strtoull(env, nullptr, 10);
  app.add_option("--seed", g.seed, "master RNG seed");
  app.add_option("--threads", g.threads, "worker thread cap (default: cores)");
  app.add_option("--budget", g.budget, "enumeration budget");
  app.add_option("--format", g.format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "write output to a file");

  // ---- patterns ----
  auto* patterns = app.add_subcommand("patterns", "pattern algebra");
  patterns->require_subcommand(1);
  int pr = 3;
  bool only_coll = false, only_part = false;
  auto* p_enum = patterns->add_subcommand("enumerate", "list all r-patterns");
  p_enum->add_option("-r", pr, "uniformity")->required();
  p_enum->add_flag("--collectable", only_coll, "collectable patterns only");
  p_enum->add_flag("--partite", only_part, "r-partite patterns only");

  std::string pw, qw, ww;
  auto* p_classify = patterns->add_subcommand("classify", "classify one pattern");
  p_classify->add_option("-P", pw, "pattern word")->required();
  auto* p_compose = patterns->add_subcommand("compose", "composition set P o Q");
  p_compose->add_option("-P", pw, "left pattern")->required();
  p_compose->add_option("-Q", qw, "right pattern")->required();
  auto* p_lift = patterns->add_subcommand("lift", "psi(W), the collectable lift");
  p_lift->add_option("-W", ww, "weak pattern over {a,k,n}")->required();

  // ---- clique ----
  auto* clique = app.add_subcommand("clique", "clique statistics");
  clique->require_subcommand(1);
  std::string in_path = "-";
  int cm = 2;
  auto* c_lp = clique->add_subcommand("lp", "largest P-clique L_P(M)");
  c_lp->add_option("-P", pw, "pattern word")->required();
  c_lp->add_option("-i,--input", in_path, "matching file (- for stdin)");
  auto* c_largest = clique->add_subcommand("largest", "L(M) and its pattern");
  c_largest->add_option("-i,--input", in_path, "matching file (- for stdin)");
  auto* c_canon = clique->add_subcommand("canonical", "canonical clique P^(m)");
  c_canon->add_option("-P", pw, "pattern word")->required();
  c_canon->add_option("-m", cm, "clique size")->required();

  // ---- ramsey ----
  auto* ramsey = app.add_subcommand("ramsey", "Ramsey algorithms");
  ramsey->require_subcommand(1);
  int rr = 3, rn = 2;
  bool use_general = false, partite_only = false;
  auto* r_find = ramsey->add_subcommand("find", "constructive clique search");
  r_find->add_option("-i,--input", in_path, "matching file (- for stdin)");
  r_find->add_flag("--general", use_general, "force the generic signature ladder");
  auto* r_construct = ramsey->add_subcommand("construct", "L(M)=n construction");
  r_construct->add_option("-r", rr, "uniformity")->required();
  r_construct->add_option("-n", rn, "clique bound")->required();
  r_construct->add_flag("--partite", partite_only, "partite construction only");
  auto* r_brute = ramsey->add_subcommand("brute", "exact L_r(n) by enumeration");
  r_brute->add_option("-r", rr, "uniformity")->required();
  r_brute->add_option("-n", rn, "matching size")->required();

  // ---- count ----
  auto* count = app.add_subcommand("count", "exact enumeration");
  count->require_subcommand(1);
  int tm = 2, tb = 2;
  bool emit_matching = false;
  auto* k_pfree = count->add_subcommand("pfree", "P-free matchings N_P(n)");
  k_pfree->add_option("-r", rr)->required();
  k_pfree->add_option("-n", rn)->required();
  k_pfree->add_option("-P", pw)->required();
  auto* k_cfree = count->add_subcommand("cliquefree", "N_{P,m}(n)");
  k_cfree->add_option("-r", rr)->required();
  k_cfree->add_option("-n", rn)->required();
  k_cfree->add_option("-P", pw)->required();
  k_cfree->add_option("-m", cm)->required();
  auto* k_formula = count->add_subcommand("formula", "total matching count");
  k_formula->add_option("-r", rr)->required();
  k_formula->add_option("-n", rn)->required();
  auto* k_partite = count->add_subcommand("partite", "(n!)^(r-1)");
  k_partite->add_option("-r", rr)->required();
  k_partite->add_option("-n", rn)->required();
  auto* k_layered = count->add_subcommand("layered", "layered clique-free generator");
  k_layered->add_option("-r", rr)->required();
  k_layered->add_option("-m", tm)->required();
  k_layered->add_option("-b", tb)->required();
  k_layered->add_flag("--emit", emit_matching, "print the matching itself");

  // ---- extremal ----
  auto* extremal = app.add_subcommand("extremal", "ordered Turan numbers");
  extremal->require_subcommand(1);
  int xn = 6, xr = 2, xm = 2, xblock = 2;
  std::string profile = "all-ones";
  double eps = 0.01;
  int split_const = 200;
  auto* x_formula = extremal->add_subcommand("formula", "gap construction size");
  x_formula->add_option("-n", xn)->required();
  x_formula->add_option("-r", xr)->required();
  x_formula->add_option("-m", xm)->required();
  auto* x_m2 = extremal->add_subcommand("m2", "exact ex for r-partite P at m=2");
  x_m2->add_option("-n", xn)->required();
  x_m2->add_option("-r", xr)->required();
  auto* x_construct = extremal->add_subcommand("construct", "gap-based free graph");
  x_construct->add_option("-n", xn)->required();
  x_construct->add_option("-P", pw)->required();
  x_construct->add_option("-m", xm)->required();
  auto* x_brute = extremal->add_subcommand("brute", "exact ex_< by branch and bound");
  x_brute->add_option("-n", xn)->required();
  x_brute->add_option("-P", pw)->required();
  x_brute->add_option("-m", xm)->required();
  auto* x_equi = extremal->add_subcommand("equipartite", "equipartite closed forms");
  x_equi->add_option("-n", xn)->required();
  x_equi->add_option("-m", xm)->required();
  x_equi->add_option("-r", xr)->required();
  x_equi->add_option("--profile", profile, "all-ones or one-2")
      ->check(CLI::IsMember({"all-ones", "one-2"}));
  auto* x_contract = extremal->add_subcommand("contract", "interval contraction");
  x_contract->add_option("-i,--input", in_path, "hypergraph file");
  x_contract->add_option("-b,--block", xblock, "interval size")->required();
  auto* x_consec = extremal->add_subcommand("consecutive", "consecutive-pair graph");
  x_consec->add_option("-n", xn)->required();
  x_consec->add_option("-r", xr)->required();
  auto* x_partition = extremal->add_subcommand("partition", "equipartite partition");
  x_partition->add_option("-i,--input", in_path, "hypergraph file");
  x_partition->add_option("--eps", eps, "density threshold p >= eps");
  x_partition->add_option("--const", split_const, "splitting constant C");

  // ---- random ----
  auto* random = app.add_subcommand("random", "sampling and Monte Carlo");
  random->require_subcommand(1);
  int trials = 200;
  double box_m = 1.0, rate = 1.0;
  std::string parts_spec, algo = "exact";
  auto* s_sample = random->add_subcommand("sample", "uniform random matching");
  s_sample->add_option("-r", rr)->required();
  s_sample->add_option("-n", rn)->required();
  auto* s_bp = random->add_subcommand("estimate-bp", "Monte Carlo b_P estimate");
  s_bp->add_option("-P", pw)->required();
  s_bp->add_option("-n", rn)->required();
  s_bp->add_option("--trials", trials);
  auto* s_chain = random->add_subcommand("chain", "longest chain of a point set");
  s_chain->add_option("-i,--input", in_path, "points file (- for stdin)");
  s_chain->add_option("--parts", parts_spec,
                      "partition, e.g. \"0,1|2\" (default singletons)");
  s_chain->add_option("--algo", algo, "exact | minmax | minsum | minsum2")
      ->check(CLI::IsMember({"exact", "minmax", "minsum", "minsum2"}));
  auto* s_poisson = random->add_subcommand("poisson", "Poisson point set in a box");
  s_poisson->add_option("-m", box_m, "box side")->required();
  s_poisson->add_option("-r", rr, "dimension")->required();
  s_poisson->add_option("--rate", rate, "process rate");
  auto* s_fp = random->add_subcommand("fp", "f_P and alpha_P");
  s_fp->add_option("-P", pw)->required();
  std::vector<double> qvec;
  s_fp->add_option("-q", qvec, "interval lengths (omit for alpha_P only)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the golden acceptance suite");
  bool quick = false;
  std::vector<int> criteria;
  verify->add_flag("--quick", quick, "fast deterministic criteria only");
  verify->add_option("--criteria", criteria, "criterion numbers to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g.threads > 0) om::set_max_threads(g.threads);
    Json out;

    if (p_enum->parsed()) {
      Json rows = Json::array();
      for (const auto& p : om::enumerate_patterns(pr)) {
        if (only_coll && !om::is_collectable(p)) continue;
        if (only_part && !om::is_r_partite(p)) continue;
        rows.push_back(pattern_row(p));
      }
      out["rows"] = rows;
      out["count"] = rows.size();
    } else if (p_classify->parsed()) {
      out = pattern_row(om::Pattern(pw));
      const auto bp = om::block_partition(om::Pattern(pw));
      if (bp) {
        Json blocks = Json::array();
        for (const auto& b : bp->blocks)
          blocks.push_back({{"lo", b.lo + 1}, {"hi", b.hi}, {"a_first", b.a_first}});
        out["blocks"] = blocks;
      }
    } else if (p_compose->parsed()) {
      Json words = Json::array();
      for (const auto& c : om::compose_patterns(om::Pattern(pw), om::Pattern(qw)))
        words.push_back(c.word());
      out["compose"] = words;
    } else if (p_lift->parsed()) {
      out["pattern"] = om::collectable_lift(om::WeakPattern(ww)).word();
    } else if (c_lp->parsed()) {
      const auto m = load_matching(in_path);
      const om::Pattern p(pw);
      out = certificate_json(m, p, om::largest_P_clique(m, p));
    } else if (c_largest->parsed()) {
      const auto m = load_matching(in_path);
      const auto [p, cert] = om::largest_clique(m);
      out = certificate_json(m, p, cert);
    } else if (c_canon->parsed()) {
      out["matching"] = matching_text(om::canonical_clique(om::Pattern(pw), cm));
    } else if (r_find->parsed()) {
      const auto m = load_matching(in_path);
      const auto [p, cert] = (m.uniformity() == 3 && !use_general)
                                 ? om::find_clique_r3(m)
                                 : om::find_clique_general(m);
      out = certificate_json(m, p, cert);
    } else if (r_construct->parsed()) {
      const auto m = partite_only ? om::partite_es_construction(rr, rn)
                                  : om::ramsey_construction(rr, rn);
      out["size"] = m.size();
      out["matching"] = matching_text(m);
    } else if (r_brute->parsed()) {
      const auto res = om::brute_force_ramsey(rr, rn, g.budget);
      out["value"] = res.value;
      out["witness"] = matching_text(res.witness);
    } else if (k_pfree->parsed()) {
      out["r"] = rr;
      out["n"] = rn;
      out["pattern"] = pw;
      out["m"] = 2;
      out["count"] = big_json(om::count_P_free(rr, rn, om::Pattern(pw), g.budget));
    } else if (k_cfree->parsed()) {
      out["r"] = rr;
      out["n"] = rn;
      out["pattern"] = pw;
      out["m"] = cm;
      out["count"] =
          big_json(om::count_clique_free(rr, rn, om::Pattern(pw), cm, g.budget));
    } else if (k_formula->parsed()) {
      out["count"] = big_json(om::count_formula(rr, rn));
    } else if (k_partite->parsed()) {
      out["count"] = big_json(om::partite_count(rr, rn));
    } else if (k_layered->parsed()) {
      const auto m = g.seed ? om::layered_generate(rr, tm, tb, g.seed)
                            : om::layered_generate(rr, tm, tb);
      out["size"] = big_json(om::layered_size(rr, tm, tb));
      out["labelings"] = big_json(om::layered_labeling_count(rr, tm, tb));
      if (emit_matching) out["matching"] = matching_text(m);
    } else if (x_formula->parsed()) {
      out["value"] = big_json(om::extremal_formula(xn, xr, xm));
    } else if (x_m2->parsed()) {
      out["value"] = big_json(om::exact_m2_formula(xn, xr));
    } else if (x_construct->parsed()) {
      const auto h = om::extremal_construction(xn, om::Pattern(pw), xm);
      out["edges"] = h.edge_count();
      out["graph"] = hypergraph_text(h);
    } else if (x_brute->parsed()) {
      out["value"] = om::brute_force_ex(xn, om::Pattern(pw), xm);
    } else if (x_equi->parsed()) {
      const auto v = om::equipartite_formulas(
          xn, xm, xr,
          profile == "all-ones" ? om::EquipartiteProfile::kAllOnes
                                : om::EquipartiteProfile::kOneTwo);
      out["value"] = big_json(v.value);
      out["exact"] = v.exact;
    } else if (x_contract->parsed()) {
      out["graph"] =
          hypergraph_text(om::contract_intervals(load_hypergraph(in_path), xblock));
    } else if (x_consec->parsed()) {
      const auto h = om::consecutive_edge_graph(xn, xr);
      out["edges"] = h.edge_count();
      out["graph"] = hypergraph_text(h);
    } else if (x_partition->parsed()) {
      const auto h = load_hypergraph(in_path);
      const auto res = om::equipartite_partition(
          h,
          om::Rational(om::BigInt((long long)(eps * 1000000)), om::BigInt(1000000)),
          split_const);
      out["parts"] = res.graph.profile.size();
      out["order"] = res.graph.order;
      out["steps"] = res.steps;
      out["density"] = boost::rational_cast<double>(res.density);
      out["threshold"] = boost::rational_cast<double>(res.threshold);
      out["guarantee_met"] = res.guarantee_met;
      out["graph"] = hypergraph_text(res.graph.base);
    } else if (s_sample->parsed()) {
      out["seed"] = g.seed;
      out["matching"] = matching_text(om::sample_matching(rr, rn, g.seed));
    } else if (s_bp->parsed()) {
      const auto e = om::estimate_bP(om::Pattern(pw), rn, trials, g.seed, g.budget);
      out["op"] = "estimate_bP";
      out["params"] = Json{{"pattern", pw}, {"n", e.n}, {"trials", e.trials}};
      out["seed"] = e.seed;
      out["estimate"] = e.estimate;
      out["ci_low"] = e.ci_low;
      out["ci_high"] = e.ci_high;
      out["trials"] = e.trials;
    } else if (s_chain->parsed()) {
      std::ifstream f;
      std::istream* is = &std::cin;
      if (in_path != "-") {
        f.open(in_path);
        if (!f) throw om::InvalidInput("cannot open " + in_path);
        is = &f;
      }
      const om::PointSet s = om::read_points(*is);
      om::CoordinatePartition a = om::CoordinatePartition::singletons(s.dim());
      if (!parts_spec.empty()) {
        std::vector<std::vector<int>> parts;
        std::stringstream ps(parts_spec);
        std::string part;
        while (std::getline(ps, part, '|')) {
          std::vector<int> axes;
          std::stringstream as(part);
          std::string ax;
          while (std::getline(as, ax, ',')) axes.push_back(std::stoi(ax));
          parts.push_back(axes);
        }
        a = om::CoordinatePartition(s.dim(), parts);
      }
      om::Chain c;
      if (algo == "exact")
        c = om::longest_chain(s, a);
      else if (algo == "minmax")
        c = om::greedy_min_max_chain(s, a);
      else
        c = om::greedy_min_sum_chain(s, a, algo == "minsum2");
      out["length"] = c.length();
      out["indices"] = c.indices;
      out["valid"] = om::chain_is_valid(s, a, c);
    } else if (s_poisson->parsed()) {
      const auto s = om::poisson_box(rate, box_m, rr, g.seed);
      std::ostringstream ss;
      om::write_points(ss, s);
      out["count"] = s.size();
      out["points"] = ss.str();
    } else if (s_fp->parsed()) {
      const om::Pattern p(pw);
      if (!qvec.empty()) out["f_P"] = om::fP_evaluate(p, qvec);
      out["alpha_P"] = om::alphaP(p);
    } else if (verify->parsed()) {
      om::VerifyOptions vo;
      vo.quick = quick;
      vo.criteria = criteria;
      if (g.seed) vo.seed = g.seed;
      const auto results = om::run_acceptance(vo);
      Json rows = Json::array();
      bool all = true;
      for (const auto& r : results) {
        rows.push_back({{"criterion", r.criterion},
                        {"pass", r.pass},
                        {"name", r.name},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
        all &= r.pass;
      }
      out["rows"] = rows;
      out["all_pass"] = all;
      emit(g, out);
      return all ? 0 : 4;
    }

    emit(g, out);
    return 0;
  } catch (const om::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const om::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 4;
  } catch (const om::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

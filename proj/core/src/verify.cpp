#include "om/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "om/chains.hpp"
#include "om/clique.hpp"
#include "om/enumeration.hpp"
#include "om/errors.hpp"
#include "om/extremal.hpp"
#include "om/numeric.hpp"
#include "om/pattern.hpp"
#include "om/ramsey.hpp"
#include "om/random.hpp"
#include "om/rng.hpp"

namespace om {

namespace {

using Clock = std::chrono::steady_clock;

Pattern generalized_crossing(int r) {
  std::string w;
  for (int i = 0; i < r; ++i) w += "AB";
  return Pattern(w);
}

Pattern alternating_pattern(int r) {
  std::string w;
  for (int i = 0; i < r; ++i) w += (i % 2 == 0) ? "AB" : "BA";
  return Pattern(w);
}

CheckResult criterion1() {
  CheckResult res{1, "golden counts N_P(4) for r=3 (8626 / 8630)", false, "", 0};
  const auto t0 = Clock::now();
  const BigInt c1 = count_P_free(3, 4, Pattern("ABABAB"));
  const BigInt c2 = count_P_free(3, 4, Pattern("ABBABA"));
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = (c1 == 8626) && (c2 == 8630) && res.seconds < 5.0;
  std::ostringstream d;
  d << "ABABAB: " << c1 << ", ABBABA: " << c2;
  res.detail = d.str();
  return res;
}

CheckResult criterion2() {
  CheckResult res{2, "pattern census (total / collectable / r-partite)", false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  const long long want_total[] = {3, 10, 35};
  for (int r = 2; r <= 4; ++r) {
    const auto pats = enumerate_patterns(r);
    long long coll = 0, part = 0;
    for (const auto& p : pats) {
      if (is_collectable(p)) ++coll;
      if (is_r_partite(p)) ++part;
    }
    ok &= (long long)pats.size() == want_total[r - 2];
    ok &= coll == (long long)std::pow(3, r - 1);
    ok &= part == (long long)std::pow(2, r - 1);
    d << "r=" << r << ": " << pats.size() << "/" << coll << "/" << part << "  ";
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok;
  res.detail = d.str();
  return res;
}

CheckResult criterion3() {
  CheckResult res{3, "Ramsey oracle L_2(n)=ceil(n^(1/3)) for n<=8; L_3(2)=L_3(3)=2",
                  false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  for (int n = 1; n <= 8; ++n) {
    const auto got = brute_force_ramsey(2, n);
    const long long want = n == 1 ? 1 : ceil_root(n, 3);
    ok &= got.value == want;
    ok &= got.witness.size() == n;
    d << "L_2(" << n << ")=" << got.value << " ";
  }
  for (int n = 2; n <= 3; ++n) {
    const auto got = brute_force_ramsey(3, n);
    ok &= got.value == 2;
    d << "L_3(" << n << ")=" << got.value << " ";
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok && res.seconds < 600.0;
  res.detail = d.str();
  return res;
}

CheckResult criterion4() {
  CheckResult res{4, "constructions: sizes and exact L", false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;

  const OrderedMatching m22 = ramsey_construction(2, 2);
  const int l22 = largest_clique(m22).second.size();
  ok &= m22.size() == 8 && l22 == 2;
  d << "ramsey(2,2): " << m22.size() << " edges, L=" << l22 << "; ";

  const OrderedMatching m32 = ramsey_construction(3, 2);
  const int l32 = largest_clique(m32).second.size();
  ok &= m32.size() == 128 && l32 == 2;
  d << "ramsey(3,2): " << m32.size() << " edges, L=" << l32 << "; ";

  const OrderedMatching p32 = partite_es_construction(3, 2);
  ok &= p32.size() == 16;
  d << "partite(3,2): " << p32.size() << " edges, L_P=";
  for (const auto& p : enumerate_patterns(3)) {
    if (!is_r_partite(p)) continue;
    const int lp = largest_P_clique(p32, p).size();
    ok &= lp == 2;
    d << lp;
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok && res.seconds < 60.0;
  res.detail = d.str();
  return res;
}

CheckResult criterion5(std::uint64_t seed) {
  CheckResult res{5, "constructive algorithms meet their size guarantees", false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  int runs = 0, failures = 0;
  long long min_margin = 1 << 30;
  try {
    for (const int n : {1000, 10000}) {
      for (int t = 0; t < 100; ++t) {
        const OrderedMatching m =
            sample_matching(3, n, Rng(seed).split((std::uint64_t)(n + t)).seed());
        const auto [p, cert] = find_clique_r3(m);
        ++runs;
        if (!verify_certificate(m, cert) ||
            bigpow(BigInt(2ll * cert.size()), 7u) < n) {
          ++failures;
        }
        min_margin = std::min(min_margin, (long long)cert.size());
      }
    }
    for (const int r : {2, 3, 4}) {
      const int b = (r + 1) * (1 << (r - 2));
      for (int t = 0; t < 30; ++t) {
        const int n = 1000;
        const OrderedMatching m =
            sample_matching(r, n, Rng(seed).split((std::uint64_t)(777 + 100 * r + t)).seed());
        const auto [p, cert] = find_clique_general(m);
        ++runs;
        if (!verify_certificate(m, cert) ||
            bigpow(BigInt((long long)cert.size() * (r - 1)), (unsigned)b) < n)
          ++failures;
      }
    }
  } catch (const Error& e) {
    ok = false;
    res.detail = std::string("exception: ") + e.what();
  }
  ok &= failures == 0 && runs == 290;
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok;
  if (res.detail.empty()) {
    std::ostringstream d;
    d << runs << " runs, " << failures << " failures, min r3 clique " << min_margin;
    res.detail = d.str();
  }
  return res;
}

CheckResult criterion6() {
  CheckResult res{6, "extremal exactness for partite and alternating patterns",
                  false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  int checks = 0;
  for (const int r : {2, 3}) {
    for (const auto& p : enumerate_patterns(r)) {
      if (!is_collectable(p)) continue;
      const bool partite = is_r_partite(p);
      const bool alternating = p == alternating_pattern(r);
      for (int n = r; n <= 6; ++n) {
        for (int m = 2; m <= 3; ++m) {
          const long long ex = brute_force_ex(n, p, m);
          const BigInt formula = extremal_formula(n, r, m);
          ++checks;
          ok &= BigInt(ex) >= formula;  // the gap construction is feasible
          if (m == 2 && partite) ok &= BigInt(ex) == exact_m2_formula(n, r);
          if (alternating) ok &= BigInt(ex) == formula;  // and tight here
        }
      }
    }
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok && res.seconds < 600.0;
  d << checks << " brute-force values compared";
  res.detail = d.str();
  return res;
}

CheckResult criterion7() {
  CheckResult res{7, "gap tuple count vs direct enumeration", false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  long long cases = 0;
  for (int r = 1; r <= 4; ++r) {
    std::vector<long long> delta((size_t)r - 1, 0);
    const long long combos = (long long)std::pow(4, r - 1);
    for (long long code = 0; code < combos; ++code) {
      long long c = code;
      for (int i = 0; i < r - 1; ++i) {
        delta[(size_t)i] = c % 4;
        c /= 4;
      }
      for (int n = r; n <= 12; ++n) {
        // direct oracle: scan all increasing r-tuples
        long long direct = 0;
        std::vector<int> tup((size_t)r);
        const std::function<void(int, int)> rec = [&](int pos, int lo) {
          if (pos == r) {
            ++direct;
            return;
          }
          const long long need = pos == 0 ? 1 : tup[(size_t)pos - 1] + delta[(size_t)pos - 1] + 1;
          for (int v = (int)std::max((long long)lo, need); v <= n; ++v) {
            tup[(size_t)pos] = v;
            rec(pos + 1, v + 1);
          }
        };
        rec(0, 1);
        ok &= gap_tuple_count(n, delta) == direct;
        ++cases;
      }
    }
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok;
  res.detail = std::to_string(cases) + " (n, delta) cases";
  return res;
}

CheckResult criterion8() {
  CheckResult res{8, "layered generator: closed-form size and exact L_P < m", false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  const int triples[3][3] = {{2, 2, 2}, {2, 3, 4}, {3, 3, 4}};
  for (const auto& tr : triples) {
    const int r = tr[0], m = tr[1], b = tr[2];
    const Pattern p = generalized_crossing(r);
    for (int variant = 0; variant < 3; ++variant) {
      const OrderedMatching mm =
          variant == 0 ? layered_generate(r, m, b)
                       : layered_generate(r, m, b, (std::uint64_t)variant);
      ok &= BigInt(mm.size()) == layered_size(r, m, b);
      const long long lp = exact_LP(mm, p);
      ok &= lp < m;
      if (variant == 0)
        d << "(r=" << r << ",m=" << m << ",b=" << b << "): n=" << mm.size()
          << " L_P=" << lp << "; ";
    }
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok;
  res.detail = d.str();
  return res;
}

CheckResult criterion9(std::uint64_t seed) {
  CheckResult res{9, "Monte Carlo limit constants (alignment, crossing, nesting, type-3)",
                  false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  d.precision(4);
  d << std::fixed;

  const auto e_align = estimate_bP(Pattern("AABB"), 10000, 200, seed + 1);
  ok &= e_align.estimate >= 1.01 && e_align.estimate <= 1.24;
  d << "align " << e_align.estimate << " (2/sqrt(pi)=" << 2.0 / std::sqrt(M_PI) << "); ";

  const auto e_cross = estimate_bP(Pattern("ABAB"), 10000, 200, seed + 2);
  ok &= e_cross.estimate >= 1.27 && e_cross.estimate <= 1.55;
  d << "cross " << e_cross.estimate << "; ";

  const auto e_nest = estimate_bP(Pattern("ABBA"), 10000, 200, seed + 3);
  ok &= e_nest.estimate >= 1.27 && e_nest.estimate <= 1.55;
  d << "nest " << e_nest.estimate << " (sqrt2=" << std::sqrt(2.0) << "); ";

  const auto e_type3 = estimate_bP(Pattern("AAABBB"), 27000, 200, seed + 4);
  ok &= e_type3.estimate >= 1.00 && e_type3.estimate <= 1.23;
  d << "type-3 " << e_type3.estimate << " (1/Gamma(4/3)=" << 1.0 / lanczos_gamma(4.0 / 3.0)
    << ")";

  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok && res.seconds < 1800.0;
  res.detail = d.str();
  return res;
}

CheckResult criterion10(std::uint64_t seed) {
  CheckResult res{10, "b_P depends on the type only: overlapping CIs for type 2+1+1",
                  false, "", 0};
  const auto t0 = Clock::now();
  // |AABB|AB|BA| and |AB|AABB|AB| share type 2+1+1 (r = 4)
  const Pattern p1("AABBABBA"), p2("ABAABBAB");
  const auto e1 = estimate_bP(p1, 10000, 20, seed + 5);
  const auto e2 = estimate_bP(p2, 10000, 20, seed + 5);
  const bool overlap = e1.ci_low <= e2.ci_high && e2.ci_low <= e1.ci_high;
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = overlap;
  std::ostringstream d;
  d.precision(4);
  d << std::fixed << "CI1 [" << e1.ci_low << ", " << e1.ci_high << "]  CI2 ["
    << e2.ci_low << ", " << e2.ci_high << "]";
  res.detail = d.str();
  return res;
}

CheckResult criterion11(std::uint64_t seed) {
  CheckResult res{11, "longest_chain equals subset brute force (<=12 points)", false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  long long cases = 0;
  const int r = 3;
  const std::vector<CoordinatePartition> parts = {
      CoordinatePartition::singletons(r),
      CoordinatePartition(r, {{0, 1}, {2}}),
      CoordinatePartition(r, {{0}, {1, 2}}),
      CoordinatePartition(r, {{0, 2}, {1}}),
      CoordinatePartition::single_part(r)};
  Rng rng(seed + 11);
  for (int s = 0; s < 500; ++s) {
    const int n = 8 + (int)rng.below(5);  // 8..12 points
    std::vector<double> flat;
    for (int i = 0; i < n * r; ++i) flat.push_back(rng.uniform());
    const PointSet ps(r, std::move(flat));
    // a set is a chain iff pairwise comparable (the order is transitive)
    for (const auto& a : parts) {
      std::vector<std::uint32_t> sym((size_t)n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && (chain_leq(ps.point(i), ps.point(j), a) ||
                         chain_leq(ps.point(j), ps.point(i), a)))
            sym[(size_t)i] |= 1u << j;
      int oracle = 0;
      for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
        bool chain = true;
        for (std::uint32_t x = sub; x && chain; x &= x - 1) {
          const int i = std::countr_zero(x);
          if ((sub & ~(1u << i)) & ~sym[(size_t)i]) chain = false;
        }
        if (chain) oracle = std::max(oracle, std::popcount(sub));
      }
      const Chain got = longest_chain(ps, a);
      ok &= chain_is_valid(ps, a, got) && got.length() == oracle;
      ++cases;
    }
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok;
  res.detail = std::to_string(cases) + " point set / partition pairs";
  return res;
}

CheckResult criterion12(std::uint64_t seed) {
  CheckResult res{12, "equipartite suite (refine bound, edge counts, window tightness)",
                  false, "", 0};
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;

  // (a) refine on 100 seeded dense instances
  Rng rng(seed + 12);
  int met = 0;
  for (int inst = 0; inst < 100; ++inst) {
    const int r = inst % 2 == 0 ? 2 : 3;
    const int R = 2 + (int)rng.below(2);  // 2 or 3
    std::vector<int> profile;
    if (r == 2) {
      profile = {2};
    } else {
      profile = (inst % 4 == 1) ? std::vector<int>{3} : std::vector<int>{1, 2};
    }
    const int k = (int)profile.size();
    const int n0 = 6 * R * (1 + (int)rng.below(2));  // >= 2rR
    // dense random profile-respecting graph
    std::vector<std::vector<Vertex>> edges;
    std::vector<std::vector<Vertex>> pools((size_t)k);
    for (int part = 0; part < k; ++part)
      for (int v = part * n0 + 1; v <= (part + 1) * n0; ++v)
        pools[(size_t)part].push_back(v);
    const std::function<void(int, std::vector<Vertex>&)> gen =
        [&](int part, std::vector<Vertex>& acc) {
          if (part == k) {
            if (rng.uniform() < 0.8) edges.push_back(acc);
            return;
          }
          // choose profile[part] vertices from the pool
          const std::function<void(int, int)> pickrec = [&](int pos, int lo) {
            if (pos == profile[(size_t)part]) {
              gen(part + 1, acc);
              return;
            }
            for (int t = lo; t < n0; ++t) {
              acc.push_back(pools[(size_t)part][(size_t)t]);
              pickrec(pos + 1, t + 1);
              acc.pop_back();
            }
          };
          pickrec(0, 0);
        };
    std::vector<Vertex> acc;
    gen(0, acc);
    EquipartiteGraph g = make_equipartite(
        OrderedHypergraph(r, k * n0, std::move(edges)), profile);
    const RefineResult ref = equipartite_refine(g, R);
    make_equipartite(ref.graph.base, ref.graph.profile);  // re-validate invariants
    if (ref.guarantee_met) ++met;
  }
  ok &= met == 100;
  d << "refine bound met on " << met << "/100; ";

  // (b) consecutive edge graph counts
  bool counts_ok = true;
  for (int r = 2; r <= 4; ++r)
    for (int n = r; n <= 12; ++n) {
      const auto g = consecutive_edge_graph(n, r);
      counts_ok &= BigInt(g.edge_count()) ==
                   binomial(n, r) - binomial(pos_part((long long)n - r + 1), r);
    }
  ok &= counts_ok;
  d << "counts " << (counts_ok ? "ok" : "BAD") << "; ";

  // (c) tightness of the consecutive-pair graph at r=3: every
  // (>=2)-equipartite window subgraph
  // of order m <= 30 has (r-1)-density <= 2.5
  const int N = 70;
  // membership in the consecutive-edge graph needs no lookup table
  auto has_edge = [](Vertex a, Vertex b, Vertex c) {
    return b == a + 1 || c == b + 1;
  };
  double max_density = 0;
  for (int m = 2; m <= 30; ++m) {
    // profiles (2,1) and (1,2) over all disjoint window placements
    for (int s1 = 1; s1 + m - 1 <= N; ++s1) {
      for (int s2 = s1 + m; s2 + m - 1 <= N; ++s2) {
        long long cnt21 = 0, cnt12 = 0;
        for (int a = 0; a < m; ++a)
          for (int b = a + 1; b < m; ++b)
            for (int c = 0; c < m; ++c)
              if (has_edge(s1 + a, s1 + b, s2 + c)) ++cnt21;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
              if (has_edge(s1 + a, s2 + b, s2 + c)) ++cnt12;
        // density = e * prod(a_i!) / m^2 = 2 e / m^2
        max_density = std::max(max_density, 2.0 * (double)cnt21 / m / m);
        max_density = std::max(max_density, 2.0 * (double)cnt12 / m / m);
      }
    }
    // profile (1,1,1): adjacent triples plus seeded samples
    Rng wrng(seed + 40 + (std::uint64_t)m);
    for (int t = 0; t < 60; ++t) {
      int s1, s2, s3;
      if (t == 0 && 3 * m <= N) {
        s1 = 1;
        s2 = s1 + m;
        s3 = s2 + m;
      } else {
        if (3 * m > N) break;
        s1 = 1 + (int)wrng.below((std::uint64_t)(N - 3 * m + 1));
        s2 = s1 + m + (int)wrng.below((std::uint64_t)(N - s1 - 3 * m + m + 1));
        s3 = s2 + m + (int)wrng.below((std::uint64_t)std::max(1, N - s2 - 2 * m + 1));
        if (s3 + m - 1 > N) continue;
      }
      long long cnt = 0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int c = 0; c < m; ++c)
            if (has_edge(s1 + a, s2 + b, s3 + c)) ++cnt;
      max_density = std::max(max_density, (double)cnt / m / m);
    }
  }
  ok &= max_density <= 2.5;
  d << "max window density " << max_density;

  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = ok;
  res.detail = d.str();
  return res;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const VerifyOptions& opts) {
  std::vector<int> which = opts.criteria;
  if (which.empty()) {
    if (opts.quick)
      which = {1, 2, 4, 7, 8};
    else
      which = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  }
  std::vector<CheckResult> out;
  for (int c : which) {
    switch (c) {
      case 1: out.push_back(criterion1()); break;
      case 2: out.push_back(criterion2()); break;
      case 3: out.push_back(criterion3()); break;
      case 4: out.push_back(criterion4()); break;
      case 5: out.push_back(criterion5(opts.seed)); break;
      case 6: out.push_back(criterion6()); break;
      case 7: out.push_back(criterion7()); break;
      case 8: out.push_back(criterion8()); break;
      case 9: out.push_back(criterion9(opts.seed)); break;
      case 10: out.push_back(criterion10(opts.seed)); break;
      case 11: out.push_back(criterion11(opts.seed)); break;
      case 12: out.push_back(criterion12(opts.seed)); break;
      default: throw InvalidInput("run_acceptance: unknown criterion");
    }
  }
  return out;
}

}  // namespace om

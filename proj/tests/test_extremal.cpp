#include "doctest.h"

#include <functional>

#include "om/errors.hpp"
#include "om/extremal.hpp"
#include "om/pattern.hpp"
#include "om/rng.hpp"

using namespace om;

namespace {

// Does g contain m pairwise-disjoint edges pairwise forming P?
bool contains_clique(const OrderedHypergraph& g, const Pattern& p, int m) {
  std::vector<const std::vector<Vertex>*> chosen;
  const std::function<bool(size_t)> rec = [&](size_t from) {
    if ((int)chosen.size() == m) return true;
    for (size_t i = from; i < g.edges().size(); ++i) {
      const auto& e = g.edges()[i];
      bool ok = true;
      for (const auto* c : chosen) {
        bool disjoint = true;
        for (Vertex v : e)
          for (Vertex w : *c)
            if (v == w) disjoint = false;
        if (!disjoint ||
            pair_mask({c->data(), c->size()}, {e.data(), e.size()}) != p.mask()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(&e);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("gap tuple count") {
  CHECK(gap_tuple_count(5, {1}) == 6);
  CHECK(gap_tuple_count(7, {0, 0}) == binomial(7, 3));
  CHECK(gap_tuple_count(5, {3, 3}) == 0);
  CHECK_THROWS_AS(gap_tuple_count(1, {0, 0}), InvalidInput);
}

TEST_CASE("extremal formulas") {
  CHECK(extremal_formula(4, 2, 2) == 5);
  CHECK(extremal_formula(6, 3, 2) == 19);
  CHECK(extremal_formula(5, 3, 2) == binomial(5, 3));  // 5 - 3 < 3
  CHECK(extremal_formula(5, 2, 4) == binomial(5, 2));  // r(m-1) >= n
  CHECK(extremal_formula(9, 3, 1) == 0);
  CHECK(exact_m2_formula(6, 3) == 19);
  CHECK(exact_m2_formula(3, 3) == 1);
  CHECK(exact_m2_formula(2, 3) == 0);
}

TEST_CASE("extremal construction is P^(m)-free with the exact edge count") {
  for (const int r : {2, 3}) {
    for (const auto& p : enumerate_patterns(r)) {
      for (int n = r; n <= 8; ++n) {
        for (int m = 1; m <= 3; ++m) {
          if (!is_collectable(p) && m > 2) continue;
          const auto g = extremal_construction(n, p, m);
          CHECK(BigInt(g.edge_count()) == extremal_formula(n, r, m));
          if (m >= 2) CHECK_FALSE(contains_clique(g, p, m));
        }
      }
    }
  }
  const auto nest4 = extremal_construction(4, Pattern("ABBA"), 2);
  CHECK(nest4.edge_count() == 5);
  CHECK_FALSE(contains_clique(nest4, Pattern("ABBA"), 2));
  CHECK(extremal_construction(6, Pattern("ABAB"), 1).edge_count() == 0);
}

TEST_CASE("brute force extremal numbers at small n") {
  // r=2 partite patterns, m=2..3: the Capoyleas-Pach / queue-number value
  for (const auto& w : {"ABAB", "ABBA"})
    for (int n = 2; n <= 7; ++n)
      for (int m = 2; m <= 3; ++m)
        CHECK(BigInt(brute_force_ex(n, Pattern(w), m)) ==
              binomial(n, 2) - binomial(pos_part(n - 2ll * (m - 1)), 2));
  CHECK(brute_force_ex(2, Pattern("ABABAB"), 2) == 0);  // n < r
}

TEST_CASE("equipartite closed forms") {
  const auto all1 = equipartite_formulas(3, 2, 2, EquipartiteProfile::kAllOnes);
  CHECK(all1.value == 5);
  CHECK(all1.exact);
  const auto big_m = equipartite_formulas(4, 9, 3, EquipartiteProfile::kAllOnes);
  CHECK(big_m.value == 64);  // m > n: everything
  const auto one2 = equipartite_formulas(5, 2, 3, EquipartiteProfile::kOneTwo);
  CHECK(one2.value == 4 * 3 * 1 * 25);
  CHECK_FALSE(one2.exact);
}

TEST_CASE("the all-ones construction achieves the count and avoids P^(m)") {
  // edges = tuples with some coordinate < m, as an ordered r-graph
  const int r = 2, n = 4, m = 2;
  std::vector<std::vector<Vertex>> edges;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (x < m + 0 || y < m + 0)
        edges.push_back({(Vertex)x, (Vertex)(n + y)});
  OrderedHypergraph g(r, 2 * n, std::move(edges));
  CHECK(BigInt(g.edge_count()) ==
        equipartite_formulas(n, m, r, EquipartiteProfile::kAllOnes).value);
  // free of the generalised crossing; the nesting-free extremal graph is
  // its image under flipping the second part
  CHECK_FALSE(contains_clique(g, Pattern("ABAB"), m));
  std::vector<std::vector<Vertex>> flipped;
  for (const auto& e : g.edges())
    flipped.push_back({e[0], (Vertex)(3 * n + 1 - e[1])});
  OrderedHypergraph gf(r, 2 * n, std::move(flipped));
  CHECK(gf.edge_count() == g.edge_count());
  CHECK_FALSE(contains_clique(gf, Pattern("ABBA"), m));
}

TEST_CASE("interval contraction") {
  Rng rng(31337);
  // identity and total collapse
  std::vector<std::vector<Vertex>> edges = {{1, 3}, {2, 5}, {4, 6}};
  const OrderedHypergraph g(2, 6, edges);
  CHECK(contract_intervals(g, 1) == g);
  CHECK(contract_intervals(g, 6).edge_count() == 0);

  // contraction never creates a nesting absent from g (fuzz, r=2)
  auto has_nesting = [](const OrderedHypergraph& h) {
    for (const auto& a : h.edges())
      for (const auto& b : h.edges())
        if (a[0] < b[0] && b[1] < a[1]) return true;  // b strictly inside a
    return false;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 8 + (int)rng.below(6);
    std::vector<std::vector<Vertex>> es;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (rng.uniform() < 0.2) es.push_back({(Vertex)a, (Vertex)b});
    const OrderedHypergraph h(2, n, es);
    const auto c = contract_intervals(h, 2 + (int)rng.below(2));
    if (has_nesting(c)) CHECK(has_nesting(h));
  }
}

TEST_CASE("equipartite refine on an already r-equipartite graph") {
  // dense 2-partite (1,1) graph: refinement keeps the all-ones profile
  const int n0 = 12;
  std::vector<std::vector<Vertex>> edges;
  Rng rng(555);
  for (int a = 1; a <= n0; ++a)
    for (int b = n0 + 1; b <= 2 * n0; ++b)
      if (rng.uniform() < 0.9) edges.push_back({(Vertex)a, (Vertex)b});
  const auto g = make_equipartite(OrderedHypergraph(2, 2 * n0, edges), {1, 1});
  const auto res = equipartite_refine(g, 2);
  CHECK(res.graph.profile == std::vector<int>{1, 1});
  CHECK(res.guarantee_met);
  make_equipartite(res.graph.base, res.graph.profile);  // invariants hold
}

TEST_CASE("equipartite refine on an empty graph is vacuous") {
  const auto g = make_equipartite(OrderedHypergraph(2, 12, {}), {2});
  const auto res = equipartite_refine(g, 3);
  CHECK(res.density == Rational(0));
  CHECK(res.guarantee_met);
}

TEST_CASE("equipartite partition") {
  // complete 3-graph with a small splitting constant
  const int n = 108;
  std::vector<std::vector<Vertex>> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        edges.push_back({(Vertex)a, (Vertex)b, (Vertex)c});
  const OrderedHypergraph g(3, n, std::move(edges));
  const auto res = equipartite_partition(g, Rational(1, 100), 2);
  CHECK((int)res.graph.profile.size() >= 2);
  CHECK(res.guarantee_met);
  CHECK(res.density >= res.threshold);

  // an input that is already (>= r-1)-equipartite returns untouched
  std::vector<std::vector<Vertex>> pe;
  for (int a = 1; a <= 6; ++a)
    for (int b = 7; b <= 12; ++b)
      for (int c = b + 1; c <= 12; ++c) pe.push_back({(Vertex)a, (Vertex)b, (Vertex)c});
  const auto already = make_equipartite(OrderedHypergraph(3, 12, pe), {1, 2});
  const auto res2 = equipartite_partition(already, Rational(1, 1000), 200);
  CHECK(res2.steps == 0);
  CHECK(res2.graph.profile == std::vector<int>{1, 2});

  // graphs that are too small report failure instead of lying
  const auto small = equipartite_partition(consecutive_edge_graph(12, 3),
                                           Rational(1, 1000), 200);
  CHECK_FALSE(small.guarantee_met);
}

TEST_CASE("consecutive edge graph") {
  const auto g = consecutive_edge_graph(5, 2);
  CHECK(g.edge_count() == 4);
  CHECK(g.edges() == std::vector<std::vector<Vertex>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(consecutive_edge_graph(3, 3).edge_count() == 1);
  for (int r = 2; r <= 4; ++r)
    for (int n = r; n <= 12; ++n)
      CHECK(BigInt(consecutive_edge_graph(n, r).edge_count()) ==
            binomial(n, r) - binomial(pos_part((long long)n - r + 1), r));
}

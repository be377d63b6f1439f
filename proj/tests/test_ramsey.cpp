#include "doctest.h"

#include <set>

#include "om/clique.hpp"
#include "om/enumeration.hpp"
#include "om/errors.hpp"
#include "om/numeric.hpp"
#include "om/ramsey.hpp"
#include "om/random.hpp"
#include "om/rng.hpp"

using namespace om;

TEST_CASE("mirsky on degenerate posets") {
  // total order: a full chain
  auto lt = [](int i, int j) { return i < j; };
  const auto chain = mirsky_decompose(10, lt, 10.0);
  CHECK(chain.is_chain);
  CHECK(chain.elements.size() == 10);

  // empty relation: everything is one antichain
  auto nope = [](int, int) { return false; };
  const auto anti = mirsky_decompose(10, nope, 1.5);
  CHECK_FALSE(anti.is_chain);
  CHECK(anti.elements.size() == 10);
}

TEST_CASE("mirsky inequality on random transitive relations") {
  Rng rng(515);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 20 + (int)rng.below(30);
    // random DAG, then transitive closure
    std::vector<std::vector<char>> rel((size_t)n, std::vector<char>((size_t)n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) rel[(size_t)i][(size_t)j] = rng.uniform() < 0.1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rel[(size_t)i][(size_t)k] && rel[(size_t)k][(size_t)j])
            rel[(size_t)i][(size_t)j] = 1;
    auto less = [&](int i, int j) { return rel[(size_t)i][(size_t)j] != 0; };
    // chain of maximal height, then the antichain level: product >= n
    const auto full = mirsky_decompose(n, less, (double)n + 1);
    CHECK_FALSE(full.is_chain);
    const auto chain = mirsky_decompose(n, less, 1.0);
    CHECK(chain.is_chain);
    CHECK((long long)chain.elements.size() * (long long)full.elements.size() >= n);
    // validity of both outputs
    for (size_t t = 0; t + 1 < chain.elements.size(); ++t)
      CHECK(less(chain.elements[t], chain.elements[t + 1]));
    for (size_t a = 0; a < full.elements.size(); ++a)
      for (size_t b = a + 1; b < full.elements.size(); ++b)
        CHECK_FALSE(less(full.elements[a], full.elements[b]));
  }
}

TEST_CASE("transitivity audit catches the crossing counterexample") {
  // e crosses f, f crosses g, but e and g align
  const OrderedMatching m(2, {{1, 4}, {2, 6}, {5, 8}, {3, 7}});
  std::vector<int> ground = {0, 1, 3};  // {1,4}, {2,6}, {5,8} after sorting
  PosetRelation rel(m, ground, {Pattern("ABAB")});
  CHECK_THROWS_AS(rel.audit_transitivity(), VerificationError);
}

TEST_CASE("find_clique_general meets the Erdos-Szekeres style bound") {
  Rng rng(626);
  for (const int r : {2, 3}) {
    const int b = (r + 1) * (1 << (r - 2));
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 50 + (int)rng.below(200);
      const OrderedMatching m = sample_matching(r, n, rng.below(1u << 30));
      const auto [p, cert] = find_clique_general(m);
      CHECK(verify_certificate(m, cert));
      CHECK(bigpow(BigInt((long long)cert.size() * (r - 1)), (unsigned)b) >= n);
    }
  }
  // a single canonical clique comes back essentially whole
  const auto clique = canonical_clique(Pattern("ABAB"), 12);
  const auto [p, cert] = find_clique_general(clique);
  CHECK(cert.size() == 12);
}

TEST_CASE("find_clique_r3 meets n^(1/7)/2 and never exceeds the truth") {
  Rng rng(727);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + (int)rng.below(7);  // up to 10: brute-force comparable
    const OrderedMatching m = sample_matching(3, n, rng.below(1u << 30));
    const auto [p, cert] = find_clique_r3(m);
    CHECK(verify_certificate(m, cert));
    CHECK(bigpow(BigInt(2ll * cert.size()), 7u) >= n);
    CHECK(cert.size() <= largest_clique(m).second.size());
  }
  // the nesting-of-nestings clique is returned in full
  const auto nn = canonical_clique(collectable_lift(WeakPattern("nn")), 9);
  CHECK(find_clique_r3(nn).second.size() == 9);
  CHECK_THROWS_AS(find_clique_r3(sample_matching(2, 5, 1)), InvalidInput);
}

TEST_CASE("blowup") {
  const auto m = canonical_clique(Pattern("AABB"), 2);
  const auto mp = canonical_clique(Pattern("ABAB"), 3);
  const auto b = blowup(m, mp);
  CHECK(b.size() == m.size() * mp.size());
  // M-pairs reproduce the pattern of their host edges (M' is r-partite)
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      for (int fi = 0; fi < mp.size(); ++fi)
        for (int fj = 0; fj < mp.size(); ++fj)
          CHECK(pair_mask(b, i * mp.size() + fi, j * mp.size() + fj) ==
                pair_mask(m, i, j));
}

TEST_CASE("partite Erdos-Szekeres construction") {
  const auto m = partite_es_construction(2, 2);
  CHECK(m.size() == 4);
  CHECK(largest_P_clique(m, Pattern("ABAB")).size() == 2);
  CHECK(largest_P_clique(m, Pattern("ABBA")).size() == 2);
  // r-partite structure: one vertex per contiguous interval
  const auto m3 = partite_es_construction(3, 2);
  CHECK(m3.size() == 16);
  for (int i = 0; i < m3.size(); ++i)
    for (int t = 0; t < 3; ++t)
      CHECK((m3.edge(i)[(size_t)t] - 1) / m3.size() == t);
}

TEST_CASE("ramsey construction") {
  const auto m22 = ramsey_construction(2, 2);
  CHECK(m22.size() == 8);
  CHECK(largest_clique(m22).second.size() == 2);

  const auto m23 = ramsey_construction(2, 3);
  CHECK(m23.size() == 27);
  CHECK(largest_clique(m23).second.size() == 3);

  // every pair of edges forms a collectable pattern (r <= 3, n = 2)
  for (int r = 2; r <= 3; ++r) {
    const auto m = ramsey_construction(r, 2);
    for (int i = 0; i < m.size(); ++i)
      for (int j = i + 1; j < m.size(); ++j)
        CHECK(is_collectable(pattern_from_mask(pair_mask(m, i, j), r)));
  }
}

TEST_CASE("brute force ramsey oracle") {
  CHECK(brute_force_ramsey(2, 1).value == 1);
  for (int n = 2; n <= 5; ++n) {
    const auto got = brute_force_ramsey(2, n);
    CHECK(got.value == ceil_root(n, 3));
    CHECK(largest_clique(got.witness).second.size() == got.value);
  }
  CHECK(brute_force_ramsey(3, 2).value == 2);
  CHECK_THROWS_AS(brute_force_ramsey(3, 12), BudgetExceeded);
}

namespace {

// Random generalised-nesting clique for r=3: repeatedly wrap the current
// matching in a fresh outer edge, on the left gap or the right gap.
OrderedMatching random_p3_clique(int k, Rng& rng) {
  std::vector<std::vector<double>> edges;  // fractional positions, then rank
  double lo = 0.0, hi = 1.0;
  std::vector<std::vector<double>> out;
  for (int t = 0; t < k; ++t) {
    const double a = lo + (hi - lo) * 0.1, b = lo + (hi - lo) * 0.2;
    const double c = lo + (hi - lo) * 0.8, d = lo + (hi - lo) * 0.9;
    if (rng.uniform() < 0.5) {
      // psi(an): two vertices left of the nest, one right
      out.push_back({a, b, d});
      lo = b;
      hi = c;
    } else {
      // psi(na): one vertex left, two right
      out.push_back({a, c, d});
      lo = a + (b - a) * 0.1;
      hi = b;
    }
  }
  // rank the 3k reals into vertices 1..3k
  std::vector<double> all;
  for (const auto& e : out)
    for (double x : e) all.push_back(x);
  std::sort(all.begin(), all.end());
  std::vector<std::vector<Vertex>> ranked;
  for (const auto& e : out) {
    std::vector<Vertex> v;
    for (double x : e)
      v.push_back((Vertex)(std::lower_bound(all.begin(), all.end(), x) - all.begin() + 1));
    ranked.push_back(v);
  }
  return OrderedMatching(3, std::move(ranked));
}

}  // namespace

TEST_CASE("dominated extraction") {
  const Pattern an = collectable_lift(WeakPattern("an"));
  const Pattern na = collectable_lift(WeakPattern("na"));

  // singleton class: everything comes back
  const auto kk = canonical_clique(Pattern("ABABAB"), 6);
  CHECK(dominated_extract(kk, {Pattern("ABABAB")}).size() == 6);

  // random generalised-nesting cliques of size 2k yield >= k
  Rng rng(828);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + (int)rng.below(5);
    const auto m = random_p3_clique(2 * k, rng);
    const auto cert = dominated_extract(m, {an, na});
    CHECK(verify_certificate(m, cert));
    CHECK(cert.size() >= k);
  }

  // a class set that is neither left- nor right-dominated is rejected
  const OrderedMatching mix(2, {{1, 2}, {3, 6}, {4, 5}});
  CHECK_THROWS_AS(dominated_extract(mix, {Pattern("AABB"), Pattern("ABBA")}),
                  VerificationError);
  // and inputs that are not classes-cliques are rejected
  CHECK_THROWS_AS(dominated_extract(mix, {an, na}), VerificationError);
}

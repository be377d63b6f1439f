#include "om/extremal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "om/errors.hpp"
#include "internal/combinations.hpp"

namespace om {

BigInt gap_tuple_count(long long n, const std::vector<long long>& deltas) {
  const int r = (int)deltas.size() + 1;
  if (n < r) throw InvalidInput("gap_tuple_count: n >= r required");
  long long total = 0;
  for (long long d : deltas) {
    if (d < 0) throw InvalidInput("gap_tuple_count: deltas must be nonnegative");
    total += d;
  }
  return binomial(pos_part(n - total), r);
}

BigInt extremal_formula(long long n, int r, int m) {
  if (n < 1 || r < 1 || m < 1) throw InvalidInput("extremal_formula: bad parameters");
  return binomial(n, r) - binomial(pos_part(n - (long long)r * (m - 1)), r);
}

BigInt exact_m2_formula(long long n, int r) {
  return binomial(n, r) - binomial(pos_part(n - r), r);
}

namespace {

// s_1..s_r of a pattern: B-vertices strictly between consecutive
// A-vertices, and after the last one.
std::vector<int> gap_profile(const Pattern& p) {
  const int r = p.uniformity();
  std::vector<int> pa, pb;
  for (int t = 0; t < 2 * r; ++t)
    (p.word()[(size_t)t] == 'A' ? pa : pb).push_back(t);
  std::vector<int> s((size_t)r, 0);
  for (int j = 0; j < r; ++j) {
    if (pb[(size_t)j] > pa[(size_t)r - 1]) {
      s[(size_t)r - 1]++;  // after the last A-vertex
      continue;
    }
    for (int i = 0; i + 1 < r; ++i)
      if (pb[(size_t)j] > pa[(size_t)i] && pb[(size_t)j] < pa[(size_t)i + 1]) {
        s[(size_t)i]++;
        break;
      }
  }
  assert(std::accumulate(s.begin(), s.end(), 0) == r);
  return s;
}

}  // namespace

OrderedHypergraph extremal_construction(int n, const Pattern& p, int m) {
  const int r = p.uniformity();
  if (n < 1 || m < 1) throw InvalidInput("extremal_construction: bad parameters");
  if (binomial(n, r) > 10'000'000)
    throw BudgetExceeded("extremal_construction: too many candidate edges");
  const std::vector<int> s = gap_profile(p);
  std::vector<std::vector<Vertex>> edges;
  detail::for_each_index_combination(n, r, [&](const std::vector<int>& pick) {
    bool in = false;
    for (int i = 0; i + 1 < r; ++i)
      if (pick[(size_t)i + 1] - pick[(size_t)i] <= (long long)s[(size_t)i] * (m - 1)) {
        in = true;
        break;
      }
    if (!in && pick[(size_t)r - 1] + 1 >= n - (long long)s[(size_t)r - 1] * (m - 1) + 1)
      in = true;
    if (!in) return;
    std::vector<Vertex> e((size_t)r);
    for (int i = 0; i < r; ++i) e[(size_t)i] = pick[(size_t)i] + 1;
    edges.push_back(std::move(e));
  });
  OrderedHypergraph g(r, n, std::move(edges));
  assert(BigInt(g.edge_count()) == extremal_formula(n, r, m));
  return g;
}

namespace {

struct ExSearch {
  int r, m;
  std::uint32_t pmask;
  std::vector<std::vector<Vertex>> cand;  // all candidate edges, lex order
  std::vector<int> chosen;
  long long best = 0;
  std::uint64_t nodes = 0, node_budget = 0;

  bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      (a[i] < b[j]) ? ++i : ++j;
    }
    return true;
  }

  bool forms_p(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
    return pair_mask({a.data(), a.size()}, {b.data(), b.size()}) == pmask;
  }

  // does `friends` (indices compatible with the incoming edge) contain a
  // pairwise-compatible set of size need?
  bool has_compatible(const std::vector<int>& friends, size_t from, int need) const {
    if (need == 0) return true;
    for (size_t t = from; t < friends.size(); ++t) {
      std::vector<int> next;
      for (size_t u = t + 1; u < friends.size(); ++u) {
        const auto& a = cand[(size_t)friends[t]];
        const auto& b = cand[(size_t)friends[u]];
        if (disjoint(a, b) && forms_p(a, b)) next.push_back(friends[u]);
      }
      if (has_compatible(next, 0, need - 1)) return true;
    }
    return false;
  }

  bool can_add(int idx) const {
    const auto& e = cand[(size_t)idx];
    std::vector<int> friends;
    for (int c : chosen)
      if (disjoint(cand[(size_t)c], e) && forms_p(cand[(size_t)c], e))
        friends.push_back(c);
    return !has_compatible(friends, 0, m - 1);
  }

  void run(size_t idx) {
    if (++nodes > node_budget)
      throw BudgetExceeded("brute_force_ex: node budget exceeded");
    if ((long long)(chosen.size() + (cand.size() - idx)) <= best) return;
    if (idx == cand.size()) {
      best = std::max(best, (long long)chosen.size());
      return;
    }
    if (can_add((int)idx)) {
      chosen.push_back((int)idx);
      run(idx + 1);
      chosen.pop_back();
    }
    run(idx + 1);
  }
};

}  // namespace

long long brute_force_ex(int n, const Pattern& p, int m, std::uint64_t node_budget) {
  const int r = p.uniformity();
  if (n < 1 || m < 1) throw InvalidInput("brute_force_ex: bad parameters");
  if (n < r) return 0;
  if (m == 1) return 0;
  if ((long long)r * m > n) {
    // P^(m) does not fit on n vertices at all
    BigInt full = binomial(n, r);
    if (full > 4'000'000'000ll)
      throw BudgetExceeded("brute_force_ex: trivial value out of range");
    return (long long)full;
  }
  ExSearch s;
  s.r = r;
  s.m = m;
  s.pmask = p.mask();
  s.node_budget = node_budget;
  detail::for_each_index_combination(n, r, [&](const std::vector<int>& pick) {
    std::vector<Vertex> e((size_t)r);
    for (int i = 0; i < r; ++i) e[(size_t)i] = pick[(size_t)i] + 1;
    s.cand.push_back(std::move(e));
  });
  if (s.cand.size() > 64)
    throw BudgetExceeded("brute_force_ex: candidate set too large");
  // the gap construction is a valid solution: seed the incumbent with it
  s.best = (long long)extremal_construction(n, p, m).edge_count();
  s.run(0);
  return s.best;
}

EquipartiteValue equipartite_formulas(long long n, int m, int r,
                                      EquipartiteProfile profile) {
  if (n < 1 || m < 1 || r < 1) throw InvalidInput("equipartite_formulas: bad parameters");
  if (profile == EquipartiteProfile::kAllOnes) {
    const BigInt inner = bigpow(BigInt(pos_part(n - m + 1)), (unsigned)r);
    return {bigpow(BigInt(n), (unsigned)r) - inner, true};
  }
  return {BigInt(4) * r * (m - 1) * bigpow(BigInt(n), (unsigned)(r - 1)), false};
}

OrderedHypergraph contract_intervals(const OrderedHypergraph& g, int block) {
  if (block < 1) throw InvalidInput("contract_intervals: block >= 1 required");
  const int r = g.uniformity();
  const int k = (g.vertex_count() + block - 1) / block;
  std::vector<std::vector<Vertex>> out;
  for (const auto& e : g.edges()) {
    std::vector<Vertex> img((size_t)r);
    bool injective = true;
    for (int i = 0; i < r; ++i) {
      img[(size_t)i] = (e[(size_t)i] - 1) / block + 1;
      if (i && img[(size_t)i] == img[(size_t)i - 1]) injective = false;
    }
    if (injective) out.push_back(std::move(img));
  }
  return OrderedHypergraph(r, k, std::move(out));  // ctor dedups
}

EquipartiteGraph make_equipartite(OrderedHypergraph base, std::vector<int> profile) {
  const int k = (int)profile.size();
  const int r = base.uniformity();
  int sum = 0;
  for (int a : profile) {
    if (a < 1) throw InvalidInput("equipartite: profile entries must be positive");
    sum += a;
  }
  if (sum != r) throw InvalidInput("equipartite: profile must sum to r");
  if (k == 0 || base.vertex_count() % k != 0)
    throw InvalidInput("equipartite: vertex count not divisible by part count");
  const int order = base.vertex_count() / k;
  for (const auto& e : base.edges()) {
    std::vector<int> deg((size_t)k, 0);
    for (Vertex v : e) deg[(size_t)((v - 1) / order)]++;
    for (int i = 0; i < k; ++i)
      if (deg[(size_t)i] != profile[(size_t)i])
        throw InvalidInput("equipartite: edge violates the part-degree profile");
  }
  return EquipartiteGraph{std::move(base), std::move(profile), order};
}

Rational equipartite_density(const EquipartiteGraph& g, int ell) {
  BigInt denom = bigpow(BigInt(g.order), (unsigned)ell);
  BigInt numer = g.base.edge_count();
  for (int a : g.profile) numer *= factorial(a);
  return Rational(numer, denom);
}

namespace {

Rational refine_bound(const Rational& p, int R, int r, int k, int t) {
  // (p / 4R) * (R / (r-k+1)^2)^(r-t)
  Rational b = p / Rational(4 * (long long)R);
  const Rational factor(BigInt(R), BigInt((long long)(r - k + 1) * (r - k + 1)));
  for (int i = 0; i < r - t; ++i) b *= factor;
  return b;
}

}  // namespace

RefineResult equipartite_refine(const EquipartiteGraph& g, int R) {
  if (R < 1) throw InvalidInput("equipartite_refine: R >= 1 required");
  const int r = g.base.uniformity();
  const int k = (int)g.profile.size();
  const int n0 = g.order;
  const int sub = n0 / R;  // new order
  if (sub < 1) throw InvalidInput("equipartite_refine: order too small for R");
  const Rational p = equipartite_density(g, r - 1);
  const int np = sub * R;  // trimmed part size, divisible by R

  // Trim each part to np vertices by deleting the lowest-degree ones;
  // this loses at most (rR/n)e(G) edges.
  std::vector<long long> degree((size_t)g.base.vertex_count() + 1, 0);
  for (const auto& e : g.base.edges())
    for (Vertex v : e) degree[(size_t)v]++;
  std::vector<char> deleted((size_t)g.base.vertex_count() + 1, 0);
  for (int part = 0; part < k; ++part) {
    std::vector<Vertex> vs;
    for (int v = part * n0 + 1; v <= (part + 1) * n0; ++v) vs.push_back(v);
    std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
      return degree[(size_t)a] < degree[(size_t)b];
    });
    for (int d = 0; d < n0 - np; ++d) deleted[(size_t)vs[(size_t)d]] = 1;
  }
  std::vector<Vertex> remap((size_t)g.base.vertex_count() + 1, 0);
  Vertex next_id = 0;
  for (int v = 1; v <= g.base.vertex_count(); ++v)
    if (!deleted[(size_t)v]) remap[(size_t)v] = ++next_id;

  // Bucket surviving edges by their block matrix (sparse cell counts).
  using Key = std::vector<std::pair<int, int>>;  // ((part, sub-interval), count)
  std::map<Key, std::vector<std::vector<Vertex>>> buckets;
  for (const auto& e : g.base.edges()) {
    bool alive = true;
    for (Vertex v : e) alive &= !deleted[(size_t)v];
    if (!alive) continue;
    std::vector<Vertex> mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) mapped.push_back(remap[(size_t)v]);
    std::sort(mapped.begin(), mapped.end());
    Key key;
    for (Vertex v : mapped) {
      const int part = (int)((v - 1) / np);
      const int cell = part * R + (int)(((v - 1) % np) / sub);
      if (!key.empty() && key.back().first == cell)
        key.back().second++;
      else
        key.push_back({cell, 1});
    }
    buckets[key].push_back(std::move(mapped));
  }

  if (buckets.empty()) {
    // vacuous: an empty subgraph on the identity class (first sub-interval
    // of every part)
    std::vector<int> prof = g.profile;
    EquipartiteGraph empty{OrderedHypergraph(r, k * sub, {}), prof, sub};
    return RefineResult{std::move(empty), Rational(0), Rational(0),
                        p == Rational(0)};
  }

  // Score each class by density relative to its own bound.
  const Key* best_key = nullptr;
  Rational best_ratio(-1);
  Rational best_density(0), best_bound(0);
  for (const auto& [key, es] : buckets) {
    const int t = (int)key.size();
    BigInt numer = (long long)es.size();
    for (const auto& [cell, cnt] : key) numer *= factorial(cnt);
    const Rational density(numer, bigpow(BigInt(sub), (unsigned)(r - 1)));
    const Rational bound = refine_bound(p, R, r, k, t);
    const Rational ratio =
        bound == Rational(0) ? density + Rational(1) : density / bound;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_key = &key;
      best_density = density;
      best_bound = bound;
    }
  }

  // Materialise the winning subgraph: chosen cells become the new parts.
  const Key& key = *best_key;
  std::vector<int> new_profile;
  for (const auto& [cell, cnt] : key) new_profile.push_back(cnt);
  std::vector<std::vector<Vertex>> out_edges;
  for (const auto& e : buckets[key]) {
    std::vector<Vertex> out;
    out.reserve(e.size());
    for (Vertex v : e) {
      const int part = (int)((v - 1) / np);
      const int cell = part * R + (int)(((v - 1) % np) / sub);
      const int cell_pos = (int)((v - 1) % (Vertex)sub);
      int slot = -1;
      for (size_t c = 0; c < key.size(); ++c)
        if (key[c].first == cell) slot = (int)c;
      out.push_back((Vertex)(slot * sub + cell_pos + 1));
    }
    std::sort(out.begin(), out.end());
    out_edges.push_back(std::move(out));
  }
  const int out_vertices = (int)new_profile.size() * sub;
  EquipartiteGraph refined = make_equipartite(
      OrderedHypergraph(r, out_vertices, std::move(out_edges)),
      std::move(new_profile));
  return RefineResult{std::move(refined), best_density, best_bound,
                      best_density >= best_bound};
}

PartitionResult equipartite_partition(const OrderedHypergraph& g,
                                      const Rational& eps, int C) {
  return equipartite_partition(make_equipartite(g, {g.uniformity()}), eps, C);
}

PartitionResult equipartite_partition(EquipartiteGraph g, const Rational& eps,
                                      int C) {
  const int r = g.base.uniformity();
  const long long n = g.base.vertex_count();
  if (n < r) throw InvalidInput("equipartite_partition: graph too small");
  const Rational p = Rational(BigInt(g.base.edge_count()) * n, binomial(n, r));
  if (p < eps)
    throw InvalidInput("equipartite_partition: density below eps");
  const Rational threshold = p / Rational(BigInt(8) * C * r * r);

  PartitionResult res{std::move(g), Rational(0), threshold, false, 0};
  res.density = equipartite_density(res.graph, r - 1);
  while ((int)res.graph.profile.size() < r - 1) {
    const int k = (int)res.graph.profile.size();
    const int R = C * (r - k + 1) * (r - k + 1);
    if (res.graph.order / R < 1) {
      // order too small to keep iterating; report what we reached
      res.guarantee_met = false;
      return res;
    }
    RefineResult step = equipartite_refine(res.graph, R);
    res.graph = std::move(step.graph);
    res.density = step.density;
    res.steps++;
  }
  res.guarantee_met = res.density >= threshold;
  return res;
}

OrderedHypergraph consecutive_edge_graph(int n, int r) {
  if (n < r || r < 1) throw InvalidInput("consecutive_edge_graph: n >= r required");
  if (binomial(n, r) > 10'000'000)
    throw BudgetExceeded("consecutive_edge_graph: too many candidate edges");
  std::vector<std::vector<Vertex>> edges;
  detail::for_each_index_combination(n, r, [&](const std::vector<int>& pick) {
    for (int i = 0; i + 1 < r; ++i) {
      if (pick[(size_t)i + 1] == pick[(size_t)i] + 1) {
        std::vector<Vertex> e((size_t)r);
        for (int t = 0; t < r; ++t) e[(size_t)t] = pick[(size_t)t] + 1;
        edges.push_back(std::move(e));
        return;
      }
    }
  });
  OrderedHypergraph g(r, n, std::move(edges));
  assert(BigInt(g.edge_count()) ==
         binomial(n, r) - binomial(pos_part((long long)n - r + 1), r));
  return g;
}

}  // namespace om

#include "om/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

#include "om/errors.hpp"
#include "om/parallel.hpp"
#include "om/rng.hpp"
#include "internal/combinations.hpp"

namespace om {

BigInt count_formula(int r, int n) {
  if (r < 1 || n < 0) throw InvalidInput("count_formula: bad parameters");
  BigInt v = factorial((long long)r * n);
  v /= bigpow(factorial(r), (unsigned)n);
  v /= factorial(n);
  return v;
}

BigInt partite_count(int r, int n) {
  if (r < 1 || n < 0) throw InvalidInput("partite_count: bad parameters");
  return bigpow(factorial(n), (unsigned)(r - 1));
}

namespace {

using detail::for_each_index_combination;

struct EnumState {
  int r;
  std::vector<Vertex> flat;      // edges built so far
  std::vector<Vertex> free_vs;   // unmatched vertices, ascending
};

// Recursive canonical generation: take the smallest free vertex, try all
// partner sets. `visit` is called on complete matchings, returns false to
// abort the whole stream.
bool enumerate_rec(EnumState& st, const std::function<bool(const OrderedMatching&)>& cb) {
  if (st.free_vs.empty()) {
    return cb(OrderedMatching::unchecked(st.r, st.flat));
  }
  const Vertex head = st.free_vs[0];
  std::vector<Vertex> rest(st.free_vs.begin() + 1, st.free_vs.end());
  bool keep_going = true;
  for_each_index_combination((int)rest.size(), st.r - 1, [&](const std::vector<int>& pick) {
    if (!keep_going) return;
    st.flat.push_back(head);
    for (int idx : pick) st.flat.push_back(rest[(size_t)idx]);
    std::vector<Vertex> next;
    next.reserve(rest.size() - pick.size());
    size_t pi = 0;
    for (int idx = 0; idx < (int)rest.size(); ++idx) {
      if (pi < pick.size() && pick[pi] == idx)
        ++pi;
      else
        next.push_back(rest[(size_t)idx]);
    }
    std::swap(st.free_vs, next);
    keep_going = enumerate_rec(st, cb);
    std::swap(st.free_vs, next);
    st.flat.resize(st.flat.size() - (size_t)st.r);
  });
  return keep_going;
}

}  // namespace

void enumerate_matchings(int r, int n,
                         const std::function<bool(const OrderedMatching&)>& cb,
                         std::uint64_t budget) {
  if (r < 1 || n < 0) throw InvalidInput("enumerate_matchings: bad parameters");
  if (count_formula(r, n) > budget)
    throw BudgetExceeded("enumerate_matchings: count exceeds budget");
  EnumState st;
  st.r = r;
  st.free_vs.resize((size_t)r * n);
  for (int v = 0; v < r * n; ++v) st.free_vs[(size_t)v] = v + 1;
  enumerate_rec(st, cb);
}

namespace {

// Shared skeleton for the avoidance counters. Maintains the pairwise-P
// adjacency among the edges built so far; `blocked` decides whether adding
// the new edge finishes a forbidden configuration.
struct AvoidCounter {
  int r;
  std::uint32_t pmask;
  int clique_bound;  // forbid P-cliques of this size (2 for P-free)
  std::vector<Vertex> flat;
  std::vector<std::uint64_t> adj;  // adjacency rows over <=64 edges

  // Is there a `need`-subset of cand that is pairwise adjacent?
  bool has_clique(const std::vector<std::uint64_t>& rows, std::uint64_t cand,
                  int need) const {
    if (need == 0) return true;
    std::uint64_t x = cand;
    while (x) {
      const int v = std::countr_zero(x);
      x &= x - 1;
      const std::uint64_t higher = (v >= 63) ? 0ull : (~0ull << (v + 1));
      if (has_clique(rows, cand & rows[(size_t)v] & higher, need - 1))
        return true;
    }
    return false;
  }

  std::uint64_t count_rec(std::vector<Vertex>& free_vs) {
    if (free_vs.empty()) return 1;
    const Vertex head = free_vs[0];
    std::vector<Vertex> rest(free_vs.begin() + 1, free_vs.end());
    std::uint64_t total = 0;
    const int k = (int)flat.size() / r;
    for_each_index_combination((int)rest.size(), r - 1, [&](const std::vector<int>& pick) {
      std::array<Vertex, 16> e;
      e[0] = head;
      for (size_t t = 0; t < pick.size(); ++t) e[t + 1] = rest[(size_t)pick[t]];
      // adjacency of the new edge against all previous ones
      std::uint64_t row = 0;
      for (int i = 0; i < k; ++i) {
        const std::uint32_t w =
            pair_mask({flat.data() + (size_t)i * r, (size_t)r}, {e.data(), (size_t)r});
        if (w == pmask) row |= 1ull << i;
      }
      if (has_clique(adj, row, clique_bound - 1))
        return;  // the new edge would complete a P-clique of forbidden size
      adj.push_back(row);
      for (int i = 0; i < k; ++i)
        if (row & (1ull << i)) adj[(size_t)i] |= 1ull << k;
      flat.insert(flat.end(), e.begin(), e.begin() + r);
      std::vector<Vertex> next;
      next.reserve(rest.size() - pick.size());
      size_t pi = 0;
      for (int idx = 0; idx < (int)rest.size(); ++idx) {
        if (pi < pick.size() && pick[pi] == idx)
          ++pi;
        else
          next.push_back(rest[(size_t)idx]);
      }
      total += count_rec(next);
      flat.resize(flat.size() - (size_t)r);
      adj.pop_back();
      for (auto& rrow : adj) rrow &= ~(1ull << k);
    });
    return total;
  }
};

BigInt count_avoiding(int r, int n, const Pattern& p, int clique_bound,
                      std::uint64_t budget) {
  if (r < 1 || n < 0) throw InvalidInput("count: bad parameters");
  if (p.uniformity() != r) throw InvalidInput("count: pattern uniformity mismatch");
  if (n > 60) throw BudgetExceeded("count: n too large for the adjacency word");
  if (count_formula(r, n) > budget)
    throw BudgetExceeded("count: enumeration exceeds budget");
  if (n == 0) return 1;

  // parallel over the first edge's partner choice
  std::vector<std::vector<int>> top;
  for_each_index_combination(r * n - 1, r - 1,
                       [&](const std::vector<int>& pick) { top.push_back(pick); });
  std::vector<std::uint64_t> partial(top.size(), 0);
  parallel_for((long long)top.size(), [&](long long ti) {
    AvoidCounter c;
    c.r = r;
    c.pmask = p.mask();
    c.clique_bound = clique_bound;
    std::vector<Vertex> rest((size_t)r * n - 1);
    for (int v = 2; v <= r * n; ++v) rest[(size_t)v - 2] = v;
    c.flat.push_back(1);
    for (int idx : top[(size_t)ti]) c.flat.push_back(rest[(size_t)idx]);
    c.adj.push_back(0);
    std::vector<Vertex> next;
    size_t pi = 0;
    for (int idx = 0; idx < (int)rest.size(); ++idx) {
      if (pi < top[(size_t)ti].size() && top[(size_t)ti][pi] == idx)
        ++pi;
      else
        next.push_back(rest[(size_t)idx]);
    }
    partial[(size_t)ti] = c.count_rec(next);
  });
  BigInt total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace

BigInt count_P_free(int r, int n, const Pattern& p, std::uint64_t budget) {
  return count_avoiding(r, n, p, 2, budget);
}

BigInt count_clique_free(int r, int n, const Pattern& p, int m, std::uint64_t budget) {
  if (m < 2) throw InvalidInput("count_clique_free: m >= 2 required");
  return count_avoiding(r, n, p, m, budget);
}

namespace {

struct LayeredLayout {
  int a, b;
  std::vector<std::vector<int>> tuples;  // lex order
  std::vector<long long> degree;        // d_j for j in a..b
};

LayeredLayout layered_layout(int r, int m, int b) {
  if (r < 2) throw InvalidInput("layered: r >= 2 required");
  if (m < 2 || (m - 1) % (r - 1) != 0)
    throw InvalidInput("layered: m-1 must be divisible by r-1");
  const int a = (m - 1) / (r - 1);
  if (b < r * a) throw InvalidInput("layered: b >= r(m-1)/(r-1) required");
  LayeredLayout lay;
  lay.a = a;
  lay.b = b;
  lay.degree.assign((size_t)(b - a + 1), 0);
  std::vector<int> tup((size_t)r, a);
  // enumerate {a..b}^r tuples with b+1 <= sum <= b+m-1, lexicographically
  const std::function<void(int, int)> rec = [&](int pos, int sum) {
    if (pos == r) {
      if (sum >= b + 1 && sum <= b + m - 1) {
        lay.tuples.push_back(tup);
        lay.degree[(size_t)(tup[0] - a)]++;
      }
      return;
    }
    for (int j = a; j <= b; ++j) {
      // remaining coordinates lie in [a, b]
      const int lo = sum + j + a * (r - pos - 1);
      const int hi = sum + j + b * (r - pos - 1);
      if (hi < b + 1 || lo > b + m - 1) continue;
      tup[(size_t)pos] = j;
      rec(pos + 1, sum + j);
    }
  };
  rec(0, 0);
  return lay;
}

}  // namespace

BigInt layered_size(int r, int m, int b) {
  if (r < 2 || m < 2 || (m - 1) % (r - 1) != 0 || b < r * (m - 1) / (r - 1))
    throw InvalidInput("layered_size: bad parameters");
  const int a = (m - 1) / (r - 1);
  return binomial(b + r - a, r) - binomial(b + r - r * a, r);
}

BigInt layered_labeling_count(int r, int m, int b) {
  const auto lay = layered_layout(r, m, b);
  BigInt per_axis = 1;
  for (long long d : lay.degree) per_axis *= factorial(d);
  return bigpow(per_axis, (unsigned)r);
}

OrderedMatching layered_generate(int r, int m, int b,
                               std::optional<std::uint64_t> seed) {
  const auto lay = layered_layout(r, m, b);
  const long long n = (long long)lay.tuples.size();
  assert(BigInt(n) == layered_size(r, m, b));
  const int span = lay.b - lay.a + 1;

  // interval starts: axis i, level j
  std::vector<long long> start((size_t)r * span, 0);
  long long off = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < span; ++j) {
      start[(size_t)i * span + j] = off;
      off += lay.degree[(size_t)j];
    }
  assert(off == (long long)r * n);

  // per (axis, level) permutation of the incident edges
  std::vector<std::vector<int>> perm((size_t)r * span);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < span; ++j) {
      auto& pm = perm[(size_t)i * span + j];
      pm.resize((size_t)lay.degree[(size_t)j]);
      for (size_t t = 0; t < pm.size(); ++t) pm[t] = (int)t;
      if (seed) {
        Rng rng = Rng(*seed).split((std::uint64_t)(i * span + j));
        std::shuffle(pm.begin(), pm.end(), rng.engine());
      }
    }

  std::vector<int> cursor((size_t)r * span, 0);
  std::vector<std::vector<Vertex>> edges(lay.tuples.size());
  for (size_t t = 0; t < lay.tuples.size(); ++t) {
    edges[t].resize((size_t)r);
    for (int i = 0; i < r; ++i) {
      const int j = lay.tuples[t][(size_t)i] - lay.a;
      const size_t cell = (size_t)i * span + j;
      const int slot = perm[cell][(size_t)cursor[cell]++];
      edges[t][(size_t)i] = (Vertex)(start[cell] + slot + 1);
    }
  }
  return OrderedMatching(r, std::move(edges));
}

}  // namespace om

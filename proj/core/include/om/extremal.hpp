#pragma once

#include <cstdint>
#include <vector>

#include "om/numeric.hpp"
#include "om/pattern.hpp"
#include "om/types.hpp"

namespace om {

// Number of r-tuples in {1..n} with gaps a_{i+1} - a_i > delta_i:
// C((n - sum delta)_+, r), r = deltas.size() + 1.
BigInt gap_tuple_count(long long n, const std::vector<long long>& deltas);

// C(n,r) - C((n - r(m-1))_+, r).
BigInt extremal_formula(long long n, int r, int m);

// The gap-based P^(m)-free graph: edge e included iff some gap
// e[i+1]-e[i] <= s_i(m-1) or e[r] >= n - s_r(m-1) + 1, where s_i counts
// vertices of P's B-edge between consecutive A-vertices.
OrderedHypergraph extremal_construction(int n, const Pattern& p, int m);

// Exact ex_<(n, P^(m)) by branch and bound seeded with the construction.
long long brute_force_ex(int n, const Pattern& p, int m,
                         std::uint64_t node_budget = 200'000'000ull);

// C(n,r) - C((n-r)_+, r): exact ex_<(n,P) for every r-partite P.
BigInt exact_m2_formula(long long n, int r);

enum class EquipartiteProfile { kAllOnes, kOneTwo };

struct EquipartiteValue {
  BigInt value;
  bool exact = false;  // the one-2 profile value is an upper bound only
};

// All-ones profile: exact n^r - ((n-m+1)_+)^r. One-2 profile: the
// 4r(m-1)n^(r-1) upper bound.
EquipartiteValue equipartite_formulas(long long n, int m, int r,
                                      EquipartiteProfile profile);

// Groups {1..n} into ceil(n/block) contiguous intervals and keeps every
// image tuple that some edge hits injectively across intervals.
OrderedHypergraph contract_intervals(const OrderedHypergraph& g, int block);

// An a-equipartite graph: contiguous parts of equal order, edge degrees
// per part prescribed by the profile.
struct EquipartiteGraph {
  OrderedHypergraph base;
  std::vector<int> profile;  // a_i >= 1, sums to the uniformity
  int order = 0;             // common part size
};

// Validates the part-degree invariants.
EquipartiteGraph make_equipartite(OrderedHypergraph base, std::vector<int> profile);

// e(G) / (order^ell / prod a_i!), exact.
Rational equipartite_density(const EquipartiteGraph& g, int ell);

struct RefineResult {
  EquipartiteGraph graph;
  Rational density;       // (r-1)-density of the returned subgraph
  Rational bound;         // (p/4R) * (R/(r-k+1)^2)^(r-t) for the chosen t
  bool guarantee_met = false;
};

// One densification step: split parts into R intervals, pick the densest
// block-matrix class. Best effort at small order, with the achieved
// density reported against the bound.
RefineResult equipartite_refine(const EquipartiteGraph& g, int R);

struct PartitionResult {
  EquipartiteGraph graph;
  Rational density;
  Rational threshold;  // p / (8 C r^2)
  bool guarantee_met = false;
  int steps = 0;
};

// Iterates equipartite_refine with R(k) = C (r-k+1)^2 until the subgraph
// is (>= r-1)-equipartite. p is taken from e(G) = (p/n) C(n,r); an input
// that already has >= r-1 parts comes back untouched.
PartitionResult equipartite_partition(const OrderedHypergraph& g,
                                      const Rational& eps, int C = 200);
PartitionResult equipartite_partition(EquipartiteGraph g, const Rational& eps,
                                      int C = 200);

// Every edge containing two consecutive vertices;
// e(G) = C(n,r) - C((n-r+1)_+, r).
OrderedHypergraph consecutive_edge_graph(int n, int r);

}  // namespace om

#include "om/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>

#include "om/enumeration.hpp"
#include "om/errors.hpp"
#include "om/numeric.hpp"
#include "om/parallel.hpp"
#include "om/rng.hpp"
#include "internal/combinations.hpp"

namespace om {

PosetRelation::PosetRelation(const OrderedMatching& m, std::vector<int> ground,
                             const std::vector<Pattern>& classes)
    : m_(&m), ground_(std::move(ground)) {
  for (size_t i = 0; i + 1 < ground_.size(); ++i)
    if (ground_[i] >= ground_[i + 1])
      throw InvalidInput("PosetRelation: ground must be ascending");
  masks_.reserve(classes.size());
  for (const auto& p : classes) {
    if (p.uniformity() != m.uniformity())
      throw InvalidInput("PosetRelation: class uniformity mismatch");
    masks_.push_back(p.mask());
  }
  std::sort(masks_.begin(), masks_.end());
}

bool PosetRelation::less(int a, int b) const {
  if (a >= b) return false;  // edges are sorted by first vertex
  const std::uint32_t w = pair_mask(*m_, ground_[(size_t)a], ground_[(size_t)b]);
  return std::binary_search(masks_.begin(), masks_.end(), w);
}

void PosetRelation::audit_transitivity(const TransitivityAudit& opts) const {
  const long long k = size();
  auto check = [&](int a, int b, int c) {
    if (less(a, b) && less(b, c) && !less(a, c))
      throw VerificationError("transitivity audit failed");
  };
  if (k <= opts.full_limit) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (int c = b + 1; c < k; ++c) check(a, b, c);
    return;
  }
  Rng rng(opts.seed);
  for (long long t = 0; t < opts.samples; ++t) {
    int a = (int)rng.below((std::uint64_t)k);
    int b = (int)rng.below((std::uint64_t)k);
    int c = (int)rng.below((std::uint64_t)k);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (a == b || b == c) continue;
    check(a, b, c);
  }
}

MirskyResult mirsky_decompose(int n, const std::function<bool(int, int)>& less,
                              double x) {
  if (n <= 0) throw InvalidInput("mirsky_decompose: empty ground set");
  std::vector<int> height((size_t)n, 1), pred((size_t)n, -1);
  int top = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (height[(size_t)i] + 1 > height[(size_t)j] && less(i, j)) {
        height[(size_t)j] = height[(size_t)i] + 1;
        pred[(size_t)j] = i;
      }
    }
    if (height[(size_t)j] > height[(size_t)top]) top = j;
  }
  const int h = height[(size_t)top];
  MirskyResult res;
  if ((double)h >= x) {
    res.is_chain = true;
    for (int v = top; v != -1; v = pred[(size_t)v]) res.elements.push_back(v);
    std::reverse(res.elements.begin(), res.elements.end());
    return res;
  }
  // largest height level; lowest level wins a tie
  std::vector<int> level_count((size_t)h + 1, 0);
  for (int v = 0; v < n; ++v) level_count[(size_t)height[(size_t)v]]++;
  int best_level = 1;
  for (int l = 2; l <= h; ++l)
    if (level_count[(size_t)l] > level_count[(size_t)best_level]) best_level = l;
  for (int v = 0; v < n; ++v)
    if (height[(size_t)v] == best_level) res.elements.push_back(v);
  return res;
}

MirskyResult mirsky_decompose(const PosetRelation& rel, double x,
                              const TransitivityAudit& audit) {
  rel.audit_transitivity(audit);
  return mirsky_decompose(rel.size(), [&](int i, int j) { return rel.less(i, j); }, x);
}

namespace {

// Maps a certificate on an induced sub-matching back to parent indices.
CliqueCertificate lift_certificate(const CliqueCertificate& local,
                                   const std::vector<int>& ground) {
  CliqueCertificate cert{local.pattern, {}};
  cert.edge_indices.reserve(local.edge_indices.size());
  for (int i : local.edge_indices) cert.edge_indices.push_back(ground[(size_t)i]);
  return cert;
}

// Extraction from a single-signature class clique: the clique is a
// W-clique for one weak pattern W, drop to the psi(W)-clique.
CliqueCertificate extract_from_signature_clique(const OrderedMatching& m,
                                                const std::vector<int>& members) {
  const int r = m.uniformity();
  if (members.size() == 1) {
    Pattern align(std::string((size_t)r, 'A') + std::string((size_t)r, 'B'));
    return CliqueCertificate{align, members};
  }
  const OrderedMatching sub = m.induced(members);
  const WeakPattern w = weak_pattern(pattern_from_mask(pair_mask(sub, 0, 1), r));
  return lift_certificate(weak_clique_extract(sub, w), members);
}

std::vector<int> all_indices(int n) {
  std::vector<int> v((size_t)n);
  for (int i = 0; i < n; ++i) v[(size_t)i] = i;
  return v;
}

}  // namespace

std::pair<Pattern, CliqueCertificate> find_clique_general(const OrderedMatching& m) {
  const int r = m.uniformity();
  const int n = m.size();
  if (r < 2) throw InvalidInput("find_clique_general: r >= 2 required");
  if (n == 0) throw InvalidInput("find_clique_general: empty matching");
  const auto classes = signature_order(r);
  const int b = (int)classes.size();
  const long long threshold = ceil_root(n, b);

  std::vector<int> ground = all_indices(n);
  CliqueCertificate cert{classes[0][0], {}};
  for (int stage = 0; stage < b; ++stage) {
    if (stage == b - 1) {
      // everything left is a clique of the last class
      cert = extract_from_signature_clique(m, ground);
      break;
    }
    PosetRelation rel(m, ground, classes[(size_t)stage]);
    const MirskyResult res = mirsky_decompose(rel, (double)threshold);
    if (res.is_chain) {
      std::vector<int> members;
      for (int pos : res.elements) members.push_back(ground[(size_t)pos]);
      cert = extract_from_signature_clique(m, members);
      break;
    }
    std::vector<int> next;
    next.reserve(res.elements.size());
    for (int pos : res.elements) next.push_back(ground[(size_t)pos]);
    ground = std::move(next);
  }
  if (!verify_certificate(m, cert))
    throw VerificationError("find_clique_general: certificate failed verification");
  // guarantee: size >= n^(1/b) / (r-1)
  assert(bigpow(BigInt((long long)cert.size() * (r - 1)), (unsigned)b) >= n);
  return {cert.pattern, cert};
}

std::pair<Pattern, CliqueCertificate> find_clique_r3(const OrderedMatching& m) {
  if (m.uniformity() != 3) throw InvalidInput("find_clique_r3: r must be 3");
  const int n = m.size();
  if (n == 0) throw InvalidInput("find_clique_r3: empty matching");

  const Pattern psi_aa("AAABBB"), star_aa("AABABB");
  const Pattern psi_ak("AABBAB"), psi_ka("ABAABB");
  const Pattern psi_an("AABBBA"), psi_na("ABBBAA");
  const Pattern psi_kk("ABABAB"), psi_nk("ABBABA"), psi_nn("ABBAAB"), psi_kn("ABABBA");
  // stage classes; the two generalised nestings ride together (stage 2)
  const std::vector<std::vector<Pattern>> stages = {
      {psi_aa, star_aa}, {psi_ak, psi_ka}, {psi_an, psi_na},
      {psi_kk},          {psi_nk},         {psi_nn},
      {psi_kn}};
  const long long threshold = ceil_root(n, (int)stages.size());

  std::vector<int> ground = all_indices(n);
  CliqueCertificate cert{psi_aa, {}};
  for (size_t stage = 0; stage < stages.size(); ++stage) {
    std::vector<int> members;
    if (stage + 1 == stages.size()) {
      members = ground;  // a clique of the last 3-partite pattern
    } else {
      PosetRelation rel(m, ground, stages[stage]);
      const MirskyResult res = mirsky_decompose(rel, (double)threshold);
      if (!res.is_chain) {
        std::vector<int> next;
        next.reserve(res.elements.size());
        for (int pos : res.elements) next.push_back(ground[(size_t)pos]);
        ground = std::move(next);
        continue;
      }
      for (int pos : res.elements) members.push_back(ground[(size_t)pos]);
    }
    if (stage == 2 && members.size() > 1) {
      // generalised nestings: left-dominated pair, type pigeonhole
      const OrderedMatching sub = m.induced(members);
      cert = lift_certificate(dominated_extract(sub, stages[stage]), members);
    } else {
      cert = extract_from_signature_clique(m, members);
    }
    break;
  }
  if (!verify_certificate(m, cert))
    throw VerificationError("find_clique_r3: certificate failed verification");
  assert(bigpow(BigInt(2ll * cert.size()), 7u) >= n);
  return {cert.pattern, cert};
}

CliqueCertificate dominated_extract(const OrderedMatching& m,
                                    const std::vector<Pattern>& classes) {
  const int n = m.size();
  const int r = m.uniformity();
  if (n == 0) throw InvalidInput("dominated_extract: empty matching");
  std::vector<std::uint32_t> masks;
  for (const auto& p : classes) masks.push_back(p.mask());
  std::sort(masks.begin(), masks.end());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!std::binary_search(masks.begin(), masks.end(), pair_mask(m, i, j)))
        throw VerificationError("dominated_extract: not a classes-clique");

  bool left = true, right = true;
  for (const auto& p : classes)
    for (const auto& q : classes)
      for (const auto& c : compose_patterns(p, q)) {
        if (std::binary_search(masks.begin(), masks.end(), c.mask())) {
          if (!(c == p)) left = false;
          if (!(c == q)) right = false;
        }
      }
  if (!left && !right)
    throw VerificationError("dominated_extract: class set is not dominated");

  // type pigeonhole: the free end index joins the winning group
  std::map<std::uint32_t, std::vector<int>> groups;
  if (n == 1) {
    groups[classes[0].mask()].push_back(0);
  } else if (left) {
    for (int i = 0; i + 1 < n; ++i) groups[pair_mask(m, i, i + 1)].push_back(i);
  } else {
    for (int j = 1; j < n; ++j) groups[pair_mask(m, j - 1, j)].push_back(j);
  }
  std::uint32_t best_mask = groups.begin()->first;
  for (const auto& [w, g] : groups)
    if (g.size() > groups[best_mask].size()) best_mask = w;
  std::vector<int> members = groups[best_mask];
  if (n > 1) {
    if (left && members.back() != n - 1) members.push_back(n - 1);
    if (!left && right && members.front() != 0) members.insert(members.begin(), 0);
  }
  CliqueCertificate cert{pattern_from_mask(best_mask, r), members};
  if (!verify_certificate(m, cert))
    throw VerificationError("dominated_extract: extraction failed the pairwise check");
  assert((long long)cert.size() * (long long)classes.size() >= n);
  return cert;
}

OrderedMatching blowup(const OrderedMatching& m, const OrderedMatching& mp) {
  const int r = m.uniformity();
  if (mp.uniformity() != r) throw InvalidInput("blowup: uniformity mismatch");
  const long long t = mp.size();
  const long long verts = (long long)m.vertex_count() * t;
  if (verts > (1ll << 30)) throw InvalidInput("blowup: vertex count overflow");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve((size_t)m.size() * mp.size());
  for (int i = 0; i < m.size(); ++i) {
    const auto e = m.edge(i);
    for (int f = 0; f < mp.size(); ++f) {
      std::vector<Vertex> out((size_t)r);
      const auto fe = mp.edge(f);
      for (int tpos = 0; tpos < r; ++tpos) {
        const long long w = fe[(size_t)tpos] - 1;  // 0-based in {0..rt-1}
        const long long block = w / t, pos = w % t;
        out[(size_t)tpos] = (Vertex)(((long long)e[(size_t)block] - 1) * t + pos + 1);
      }
      std::sort(out.begin(), out.end());
      edges.push_back(std::move(out));
    }
  }
  return OrderedMatching(r, std::move(edges));
}

OrderedMatching partite_es_construction(int r, int n) {
  if (r < 2 || n < 1) throw InvalidInput("partite_es_construction: bad parameters");
  std::vector<Pattern> partite;
  for (const auto& p : enumerate_patterns(r))
    if (is_r_partite(p)) partite.push_back(p);
  // size check: n^(2^(r-1)) * r vertices must fit
  BigInt verts = bigpow(BigInt(n), (unsigned)(1u << (r - 1))) * r;
  if (verts > (1ll << 30))
    throw InvalidInput("partite_es_construction: vertex count overflow");
  OrderedMatching cur = canonical_clique(partite.back(), n);
  for (int i = (int)partite.size() - 2; i >= 0; --i)
    cur = blowup(canonical_clique(partite[(size_t)i], n), cur);
  return cur;
}

namespace {

// Appends one fresh vertex immediately after each edge's last vertex.
OrderedMatching extend_by_tail_vertex(const OrderedMatching& m) {
  const int r = m.uniformity();
  std::vector<Vertex> tails;
  tails.reserve((size_t)m.size());
  for (int i = 0; i < m.size(); ++i) tails.push_back(m.edge(i).back());
  std::sort(tails.begin(), tails.end());
  auto shifted = [&](Vertex u) {
    const long long before =
        std::lower_bound(tails.begin(), tails.end(), u) - tails.begin();
    return (Vertex)(u + before);
  };
  std::vector<std::vector<Vertex>> edges;
  edges.reserve((size_t)m.size());
  for (int i = 0; i < m.size(); ++i) {
    std::vector<Vertex> e;
    e.reserve((size_t)r + 1);
    for (Vertex u : m.edge(i)) e.push_back(shifted(u));
    e.push_back(shifted(m.edge(i).back()) + 1);  // the new tail vertex
    edges.push_back(std::move(e));
  }
  return OrderedMatching(r + 1, std::move(edges));
}

}  // namespace

OrderedMatching ramsey_construction(int r, int n) {
  if (r < 2 || n < 1) throw InvalidInput("ramsey_construction: bad parameters");
  BigInt verts = bigpow(BigInt(n), (unsigned)((1u << r) - 1)) * r;
  if (verts > (1ll << 30))
    throw InvalidInput("ramsey_construction: vertex count overflow");
  if (r == 2) {
    const Pattern alignment("AABB");
    return blowup(canonical_clique(alignment, n), partite_es_construction(2, n));
  }
  const OrderedMatching base = extend_by_tail_vertex(ramsey_construction(r - 1, n));
  return blowup(base, partite_es_construction(r, n));
}

namespace {

// Exact max clique among <= 64 vertices. `cand` holds candidates above the
// last chosen vertex; returns early once `stop_at` is reached.
int small_max_clique(const std::vector<std::uint64_t>& rows, std::uint64_t cand,
                     int have, int best, int stop_at) {
  std::uint64_t x = cand;
  while (x) {
    if (have + std::popcount(x) <= best) return best;
    const int v = std::countr_zero(x);
    x &= x - 1;
    best = std::max(best, have + 1);
    if (best >= stop_at) return best;
    best = small_max_clique(rows, x & rows[(size_t)v], have + 1, best, stop_at);
    if (best >= stop_at) return best;
  }
  return best;
}

// L(M) for a small matching; stops early once >= stop_at (the caller only
// cares about values below its current minimum).
int small_L(const OrderedMatching& m, int stop_at) {
  const int n = m.size();
  if (n <= 1) return n;
  std::map<std::uint32_t, std::vector<std::uint64_t>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::uint32_t w = pair_mask(m, i, j);
      auto& rr = rows[w];
      if (rr.empty()) rr.assign((size_t)n, 0);
      rr[(size_t)i] |= 1ull << j;
      rr[(size_t)j] |= 1ull << i;
    }
  int best = 2;
  const std::uint64_t all = (n >= 64) ? ~0ull : ((1ull << n) - 1);
  for (auto& [w, rr] : rows) {
    best = small_max_clique(rr, all, 0, best, stop_at);
    if (best >= stop_at) return best;
  }
  return best;
}

struct RamseyWalker {
  int r;
  int floor;  // L >= floor for every full matching; stop once reached
  std::vector<Vertex> flat;
  int local_best;
  OrderedMatching witness;

  void run(const std::vector<Vertex>& free_list) {
    if (local_best <= floor) return;
    if (free_list.empty()) {
      OrderedMatching m = OrderedMatching::unchecked(r, flat);
      const int L = small_L(m, local_best);
      if (L < local_best) {
        local_best = L;
        witness = std::move(m);
      }
      return;
    }
    const Vertex head = free_list[0];
    const std::vector<Vertex> rest(free_list.begin() + 1, free_list.end());
    const int mm = (int)rest.size();
    detail::for_each_index_combination(mm, r - 1, [&](const std::vector<int>& pick) {
      if (local_best <= floor) return;
      flat.push_back(head);
      for (int idx : pick) flat.push_back(rest[(size_t)idx]);
      std::vector<Vertex> next;
      next.reserve((size_t)(mm - (r - 1)));
      size_t pi = 0;
      for (int idx = 0; idx < mm; ++idx) {
        if (pi < pick.size() && pick[pi] == idx)
          ++pi;
        else
          next.push_back(rest[(size_t)idx]);
      }
      run(next);
      flat.resize(flat.size() - (size_t)r);
    });
  }
};

}  // namespace

RamseyOracleResult brute_force_ramsey(int r, int n, std::uint64_t budget) {
  if (r < 1 || n < 1) throw InvalidInput("brute_force_ramsey: bad parameters");
  if (n > 60) throw BudgetExceeded("brute_force_ramsey: n too large");
  if (count_formula(r, n) > budget)
    throw BudgetExceeded("brute_force_ramsey: enumeration exceeds budget");

  // parallel over the first edge's partner choice
  std::vector<std::vector<int>> top;
  detail::for_each_index_combination(r * n - 1, r - 1,
                             [&](const std::vector<int>& pick) { top.push_back(pick); });
  std::vector<int> branch_best(top.size(), n + 1);
  std::vector<OrderedMatching> branch_witness(top.size());
  const int floor = std::min(n, 2);  // any two edges already form a clique

  parallel_for((long long)top.size(), [&](long long ti) {
    std::vector<Vertex> rest((size_t)r * n - 1);
    for (int v = 2; v <= r * n; ++v) rest[(size_t)v - 2] = v;
    RamseyWalker w{r, floor, {1}, n + 1, OrderedMatching{}};
    for (int idx : top[(size_t)ti]) w.flat.push_back(rest[(size_t)idx]);
    std::vector<Vertex> free_vs;
    size_t pi = 0;
    for (int idx = 0; idx < (int)rest.size(); ++idx) {
      if (pi < top[(size_t)ti].size() && top[(size_t)ti][pi] == idx)
        ++pi;
      else
        free_vs.push_back(rest[(size_t)idx]);
    }
    w.run(free_vs);
    branch_best[(size_t)ti] = w.local_best;
    branch_witness[(size_t)ti] = std::move(w.witness);
  });

  RamseyOracleResult out;
  out.value = n + 1;
  for (size_t i = 0; i < top.size(); ++i) {
    if (branch_best[i] < out.value) {
      out.value = branch_best[i];
      out.witness = branch_witness[i];
    }
  }
  assert(out.value <= n);
  return out;
}

}  // namespace om

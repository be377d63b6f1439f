#include "om/clique.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "om/enumeration.hpp"
#include "om/errors.hpp"
#include "internal/max_clique.hpp"

namespace om {

bool verify_certificate(const OrderedMatching& m, const CliqueCertificate& cert) {
  const int n = m.size();
  for (size_t i = 0; i < cert.edge_indices.size(); ++i) {
    const int e = cert.edge_indices[i];
    if (e < 0 || e >= n) return false;
    if (i > 0 && cert.edge_indices[i - 1] >= e) return false;
  }
  for (size_t i = 0; i < cert.edge_indices.size(); ++i)
    for (size_t j = i + 1; j < cert.edge_indices.size(); ++j)
      if (pair_mask(m, cert.edge_indices[i], cert.edge_indices[j]) !=
          cert.pattern.mask())
        return false;
  return true;
}

CliqueCertificate largest_P_clique(const OrderedMatching& m, const Pattern& p) {
  if (m.size() && m.uniformity() != p.uniformity())
    throw InvalidInput("largest_P_clique: uniformity mismatch");
  const int n = m.size();
  CliqueCertificate cert{p, {}};
  if (n == 0) return cert;
  detail::MaxCliqueSolver solver(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pair_mask(m, i, j) == p.mask()) solver.relate(i, j);
  cert.edge_indices = solver.solve();
  if (cert.edge_indices.empty()) cert.edge_indices = {0};  // single edge
  if (!verify_certificate(m, cert))
    throw VerificationError("largest_P_clique produced an invalid certificate");
  return cert;
}

std::pair<Pattern, CliqueCertificate> largest_clique(const OrderedMatching& m) {
  const int n = m.size();
  if (n == 0) throw InvalidInput("largest_clique: empty matching");
  const int r = m.uniformity();
  if (n == 1) {
    Pattern align(std::string((size_t)r, 'A') + std::string((size_t)r, 'B'));
    return {align, CliqueCertificate{align, {0}}};
  }
  std::map<Pattern, int> seen;  // pattern -> multiplicity, keys in word order
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      seen[pattern_from_mask(pair_mask(m, i, j), r)]++;
  Pattern best_p = seen.begin()->first;
  CliqueCertificate best{best_p, {}};
  for (const auto& [p, mult] : seen) {
    if (mult < (int)best.edge_indices.size() * ((int)best.edge_indices.size() - 1) / 2)
      continue;  // cannot hold a clique that large
    CliqueCertificate c = largest_P_clique(m, p);
    if (c.size() > best.size()) {
      best = c;
      best_p = p;
    }
  }
  return {best_p, best};
}

OrderedMatching canonical_clique(const Pattern& p, int m) {
  if (m < 1) throw InvalidInput("canonical_clique: m >= 1 required");
  const int r = p.uniformity();
  const auto bp = block_partition(p);
  if (!bp) {
    if (m > 2)
      throw Infeasible("non-collectable pattern: largest clique has size 2");
    if (m == 1) return OrderedMatching(r, {{[&] {
              std::vector<Vertex> e(r);
              for (int t = 0; t < r; ++t) e[(size_t)t] = t + 1;
              return e;
            }()}});
    // m == 2: the pattern itself, read off the word
    std::vector<std::vector<Vertex>> es(2);
    for (int t = 0; t < 2 * r; ++t)
      es[p.word()[(size_t)t] == 'A' ? 0 : 1].push_back(t + 1);
    return OrderedMatching(r, std::move(es));
  }
  // Block l spans a contiguous segment of m*half(l) vertices. Edge chunks
  // run left to right in A-first blocks and right to left in B-first ones.
  std::vector<std::vector<Vertex>> edges((size_t)m);
  Vertex offset = 0;
  for (const auto& b : bp->blocks) {
    const int h = b.half();
    for (int i = 0; i < m; ++i) {
      const int slot = b.a_first ? i : m - 1 - i;
      for (int t = 0; t < h; ++t)
        edges[(size_t)i].push_back(offset + slot * h + t + 1);
    }
    offset += m * h;
  }
  OrderedMatching out(r, std::move(edges));
  if (m <= 64) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        assert(pair_mask(out, i, j) == p.mask());
  }
  return out;
}

CliqueCertificate weak_clique_extract(const OrderedMatching& m, const WeakPattern& w) {
  const int n = m.size();
  if (n && m.uniformity() != w.uniformity())
    throw InvalidInput("weak_clique_extract: uniformity mismatch");
  const int r = m.uniformity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (weak_pattern(pattern_from_mask(pair_mask(m, i, j), r)) != w)
        throw VerificationError("weak_clique_extract: input is not a W-clique");
    }
  int delta = 0, run = 0;
  for (char c : w.letters()) {
    run = (c == 'a') ? run + 1 : 0;
    delta = std::max(delta, run);
  }
  CliqueCertificate cert{collectable_lift(w), {}};
  const int step = std::max(1, delta);
  for (int i = 0; i < n; i += step) cert.edge_indices.push_back(i);
  if (!verify_certificate(m, cert))
    throw VerificationError("weak_clique_extract: extraction failed the pairwise check");
  assert((int)cert.edge_indices.size() * step >= n);
  return cert;
}

bool non_collectable_max_clique_check(int r) {
  bool ok = true;
  enumerate_matchings(r, 3, [&](const OrderedMatching& m) {
    const std::uint32_t w01 = pair_mask(m, 0, 1);
    if (w01 != pair_mask(m, 0, 2) || w01 != pair_mask(m, 1, 2)) return true;
    if (!is_collectable(pattern_from_mask(w01, r))) {
      ok = false;
      return false;  // stop the stream
    }
    return true;
  });
  return ok;
}

}  // namespace om

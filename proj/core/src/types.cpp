#include "om/types.hpp"

#include <algorithm>
#include <numeric>

namespace om {

Edge::Edge(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
  if (v_.empty()) throw InvalidInput("edge must have at least one vertex");
  for (size_t i = 0; i + 1 < v_.size(); ++i) {
    if (v_[i] >= v_[i + 1])
      throw InvalidInput("edge vertices must be strictly increasing");
  }
  if (v_.front() < 1) throw InvalidInput("vertices are 1-based");
}

OrderedMatching::OrderedMatching(int r, std::vector<std::vector<Vertex>> edges)
    : r_(r) {
  if (r < 1) throw InvalidInput("uniformity must be >= 1");
  const int n = (int)edges.size();
  for (auto& e : edges) {
    if ((int)e.size() != r)
      throw InvalidInput("edge size does not match uniformity");
    std::sort(e.begin(), e.end());
  }
  std::sort(edges.begin(), edges.end());
  std::vector<char> seen((size_t)r * n + 1, 0);
  for (const auto& e : edges) {
    for (Vertex v : e) {
      if (v < 1 || v > r * n) throw InvalidInput("vertex out of range");
      if (seen[v]++) throw InvalidInput("vertex used twice");
    }
  }
  flat_.reserve((size_t)r * n);
  for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

OrderedMatching OrderedMatching::unchecked(int r, std::vector<Vertex> flat) {
  OrderedMatching m;
  m.r_ = r;
  m.flat_ = std::move(flat);
  return m;
}

Edge OrderedMatching::edge_copy(int i) const {
  auto s = edge(i);
  return Edge(std::vector<Vertex>(s.begin(), s.end()));
}

OrderedMatching OrderedMatching::induced(const std::vector<int>& edge_indices) const {
  std::vector<Vertex> verts;
  verts.reserve(edge_indices.size() * r_);
  for (int i : edge_indices) {
    auto e = edge(i);
    verts.insert(verts.end(), e.begin(), e.end());
  }
  std::vector<Vertex> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  // compact labels to 1..rk
  std::vector<Vertex> flat;
  flat.reserve(verts.size());
  std::vector<std::vector<Vertex>> edges;
  for (size_t off = 0; off < verts.size(); off += r_) {
    std::vector<Vertex> e(r_);
    for (int t = 0; t < r_; ++t) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), verts[off + t]);
      e[t] = (Vertex)(it - sorted.begin() + 1);
    }
    edges.push_back(std::move(e));
  }
  return OrderedMatching(r_, std::move(edges));
}

OrderedHypergraph::OrderedHypergraph(int r, int n,
                                     std::vector<std::vector<Vertex>> edges)
    : r_(r), n_(n), edges_(std::move(edges)) {
  if (r < 1 || n < 0) throw InvalidInput("bad hypergraph dimensions");
  for (auto& e : edges_) {
    if ((int)e.size() != r) throw InvalidInput("edge size mismatch");
    std::sort(e.begin(), e.end());
    for (size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i] == e[i + 1]) throw InvalidInput("repeated vertex in edge");
    if (e.front() < 1 || e.back() > n) throw InvalidInput("vertex out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

}  // namespace om

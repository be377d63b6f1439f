#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "om/errors.hpp"

namespace om {

using Vertex = std::int32_t;

// One hyperedge: strictly increasing vertices, length = uniformity.
class Edge {
 public:
  Edge() = default;
  explicit Edge(std::vector<Vertex> vertices);

  int uniformity() const { return (int)v_.size(); }
  Vertex v(int i) const { return v_[i]; }  // 0-based
  Vertex min() const { return v_.front(); }
  Vertex max() const { return v_.back(); }
  const std::vector<Vertex>& vertices() const { return v_; }
  std::span<const Vertex> span() const { return v_; }

  bool operator==(const Edge&) const = default;

 private:
  std::vector<Vertex> v_;
};

// A perfect ordered r-matching on {1..r*size()}. Edges are stored flat and
// kept sorted by their first vertex; the object is immutable once built.
class OrderedMatching {
 public:
  OrderedMatching() = default;
  OrderedMatching(int r, std::vector<std::vector<Vertex>> edges);

  // Builds from flat storage already satisfying all invariants
  // (each edge sorted, edges sorted by first vertex, vertex partition).
  static OrderedMatching unchecked(int r, std::vector<Vertex> flat);

  int uniformity() const { return r_; }
  int size() const { return (int)(flat_.size() / (size_t)r_); }
  int vertex_count() const { return (int)flat_.size(); }

  std::span<const Vertex> edge(int i) const {
    return {flat_.data() + (size_t)i * r_, (size_t)r_};
  }
  Edge edge_copy(int i) const;

  // Sub-matching induced by the given edge indices; vertex labels are
  // compacted back to {1..r*k} preserving order.
  OrderedMatching induced(const std::vector<int>& edge_indices) const;

  const std::vector<Vertex>& flat() const { return flat_; }
  bool operator==(const OrderedMatching&) const = default;

 private:
  int r_ = 0;
  std::vector<Vertex> flat_;
};

// A general ordered r-graph on {1..n}: distinct increasing r-sets, kept in
// lexicographic order.
class OrderedHypergraph {
 public:
  OrderedHypergraph() = default;
  OrderedHypergraph(int r, int n, std::vector<std::vector<Vertex>> edges);

  int uniformity() const { return r_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return (int)edges_.size(); }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }

  bool operator==(const OrderedHypergraph&) const = default;

 private:
  int r_ = 0;
  int n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
};

}  // namespace om

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "om/types.hpp"

namespace om {

// Finite set of points in [0, box_side]^dim.
class PointSet {
 public:
  PointSet() = default;
  PointSet(int dim, std::vector<double> flat, double box_side = 1.0);

  int dim() const { return dim_; }
  int size() const { return (int)(flat_.size() / (size_t)dim_); }
  double box_side() const { return box_side_; }
  std::span<const double> point(int i) const {
    return {flat_.data() + (size_t)i * dim_, (size_t)dim_};
  }
  const std::vector<double>& flat() const { return flat_; }

 private:
  int dim_ = 0;
  double box_side_ = 1.0;
  std::vector<double> flat_;
};

// Partition of the coordinate axes {0..r-1}.
class CoordinatePartition {
 public:
  CoordinatePartition(int r, std::vector<std::vector<int>> parts);
  static CoordinatePartition singletons(int r);
  static CoordinatePartition single_part(int r);

  int dim() const { return r_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }

 private:
  int r_ = 0;
  std::vector<std::vector<int>> parts_;
};

// x <= y under the partition order: per part, max of x <= min of y.
bool chain_leq(std::span<const double> x, std::span<const double> y,
               const CoordinatePartition& a);

struct Chain {
  std::vector<int> indices;  // point indices in chain order
  int length() const { return (int)indices.size(); }
};

bool chain_is_valid(const PointSet& s, const CoordinatePartition& a,
                    const Chain& c);

// Exact longest chain (quadratic longest path over the comparability
// relation), with witness.
Chain longest_chain(const PointSet& s, const CoordinatePartition& a);

// Renewal greedy: repeatedly pick the feasible point with the smallest
// max coordinate; feasible points are those above the last pick.
Chain greedy_min_max_chain(const PointSet& s, const CoordinatePartition& a);

// Same with the smallest coordinate sum. two_step picks comparable pairs
// minimizing the larger sum instead of single points.
Chain greedy_min_sum_chain(const PointSet& s, const CoordinatePartition& a,
                           bool two_step = false);

// Poisson process of the given rate on [0,m]^r: point count is
// Poisson(rate * m^r), locations uniform.
PointSet poisson_box(double rate, double m, int r, std::uint64_t seed);

}  // namespace om

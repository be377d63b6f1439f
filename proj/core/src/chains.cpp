#include "om/chains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "om/errors.hpp"
#include "om/rng.hpp"

namespace om {

PointSet::PointSet(int dim, std::vector<double> flat, double box_side)
    : dim_(dim), box_side_(box_side), flat_(std::move(flat)) {
  if (dim < 1) throw InvalidInput("PointSet: dimension >= 1 required");
  if (flat_.size() % (size_t)dim != 0)
    throw InvalidInput("PointSet: coordinate count not divisible by dim");
  for (double x : flat_)
    if (!(x >= 0.0 && x <= box_side_))
      throw InvalidInput("PointSet: coordinate outside the box");
}

CoordinatePartition::CoordinatePartition(int r, std::vector<std::vector<int>> parts)
    : r_(r), parts_(std::move(parts)) {
  std::vector<char> seen((size_t)r, 0);
  for (const auto& part : parts_) {
    if (part.empty()) throw InvalidInput("CoordinatePartition: empty part");
    for (int i : part) {
      if (i < 0 || i >= r) throw InvalidInput("CoordinatePartition: axis out of range");
      if (seen[(size_t)i]++) throw InvalidInput("CoordinatePartition: axis repeated");
    }
  }
  for (char c : seen)
    if (!c) throw InvalidInput("CoordinatePartition: axis missing");
}

CoordinatePartition CoordinatePartition::singletons(int r) {
  std::vector<std::vector<int>> parts((size_t)r);
  for (int i = 0; i < r; ++i) parts[(size_t)i] = {i};
  return CoordinatePartition(r, std::move(parts));
}

CoordinatePartition CoordinatePartition::single_part(int r) {
  std::vector<int> all((size_t)r);
  for (int i = 0; i < r; ++i) all[(size_t)i] = i;
  return CoordinatePartition(r, {all});
}

bool chain_leq(std::span<const double> x, std::span<const double> y,
               const CoordinatePartition& a) {
  for (const auto& part : a.parts()) {
    double mx = -std::numeric_limits<double>::infinity();
    double mn = std::numeric_limits<double>::infinity();
    for (int i : part) {
      mx = std::max(mx, x[(size_t)i]);
      mn = std::min(mn, y[(size_t)i]);
    }
    if (mx > mn) return false;
  }
  return true;
}

bool chain_is_valid(const PointSet& s, const CoordinatePartition& a,
                    const Chain& c) {
  for (size_t t = 0; t + 1 < c.indices.size(); ++t)
    if (!chain_leq(s.point(c.indices[t]), s.point(c.indices[t + 1]), a))
      return false;
  return true;
}

Chain longest_chain(const PointSet& s, const CoordinatePartition& a) {
  if (s.size() && s.dim() != a.dim())
    throw InvalidInput("longest_chain: dimension mismatch");
  const int n = s.size();
  // precompute per-part max/min per point
  const int np = (int)a.parts().size();
  std::vector<double> pmax((size_t)n * np), pmin((size_t)n * np);
  for (int i = 0; i < n; ++i) {
    const auto pt = s.point(i);
    for (int j = 0; j < np; ++j) {
      double mx = -std::numeric_limits<double>::infinity();
      double mn = std::numeric_limits<double>::infinity();
      for (int ax : a.parts()[(size_t)j]) {
        mx = std::max(mx, pt[(size_t)ax]);
        mn = std::min(mn, pt[(size_t)ax]);
      }
      pmax[(size_t)i * np + j] = mx;
      pmin[(size_t)i * np + j] = mn;
    }
  }
  auto leq = [&](int x, int y) {
    for (int j = 0; j < np; ++j)
      if (pmax[(size_t)x * np + j] > pmin[(size_t)y * np + j]) return false;
    return true;
  };
  // Topological order for the comparability relation: ascending sum of
  // part maxima; on ties, points that are constant per part (the only ones
  // that can be comparable at equal key) come last, then index order.
  std::vector<double> key((size_t)n, 0.0);
  std::vector<char> flat_pt((size_t)n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < np; ++j) {
      key[(size_t)i] += pmax[(size_t)i * np + j];
      if (pmax[(size_t)i * np + j] != pmin[(size_t)i * np + j]) flat_pt[(size_t)i] = 0;
    }
  }
  std::vector<int> len((size_t)n, 0), pred((size_t)n, -1), order((size_t)n);
  for (int i = 0; i < n; ++i) order[(size_t)i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (key[(size_t)x] != key[(size_t)y]) return key[(size_t)x] < key[(size_t)y];
    if (flat_pt[(size_t)x] != flat_pt[(size_t)y])
      return flat_pt[(size_t)x] < flat_pt[(size_t)y];
    return x < y;
  });
  int best = -1;
  for (int oi = 0; oi < n; ++oi) {
    const int y = order[(size_t)oi];
    len[(size_t)y] = 1;
    for (int oj = 0; oj < oi; ++oj) {
      const int x = order[(size_t)oj];
      if (len[(size_t)x] + 1 > len[(size_t)y] && leq(x, y)) {
        len[(size_t)y] = len[(size_t)x] + 1;
        pred[(size_t)y] = x;
      }
    }
    if (best == -1 || len[(size_t)y] > len[(size_t)best]) best = y;
  }
  Chain c;
  for (int v = best; v != -1; v = pred[(size_t)v]) c.indices.push_back(v);
  std::reverse(c.indices.begin(), c.indices.end());
  if (n == 0) c.indices.clear();
  return c;
}

namespace {

Chain greedy_chain(const PointSet& s, const CoordinatePartition& a,
                   bool use_sum) {
  const int n = s.size();
  auto score = [&](int i) {
    const auto pt = s.point(i);
    double v = use_sum ? 0.0 : -std::numeric_limits<double>::infinity();
    for (double x : pt) v = use_sum ? v + x : std::max(v, x);
    return v;
  };
  std::vector<int> feasible((size_t)n);
  for (int i = 0; i < n; ++i) feasible[(size_t)i] = i;
  Chain c;
  while (!feasible.empty()) {
    int pick = feasible[0];
    for (int i : feasible)
      if (score(i) < score(pick)) pick = i;
    c.indices.push_back(pick);
    std::vector<int> next;
    for (int i : feasible)
      if (i != pick && chain_leq(s.point(pick), s.point(i), a)) next.push_back(i);
    feasible = std::move(next);
  }
  return c;
}

}  // namespace

Chain greedy_min_max_chain(const PointSet& s, const CoordinatePartition& a) {
  if (s.size() && s.dim() != a.dim())
    throw InvalidInput("greedy_min_max_chain: dimension mismatch");
  return greedy_chain(s, a, false);
}

Chain greedy_min_sum_chain(const PointSet& s, const CoordinatePartition& a,
                           bool two_step) {
  if (s.size() && s.dim() != a.dim())
    throw InvalidInput("greedy_min_sum_chain: dimension mismatch");
  if (!two_step) return greedy_chain(s, a, true);

  const int n = s.size();
  auto sum = [&](int i) {
    double v = 0;
    for (double x : s.point(i)) v += x;
    return v;
  };
  std::vector<int> feasible((size_t)n);
  for (int i = 0; i < n; ++i) feasible[(size_t)i] = i;
  std::sort(feasible.begin(), feasible.end(),
            [&](int x, int y) { return sum(x) < sum(y); });
  Chain c;
  while (!feasible.empty()) {
    // cheapest comparable pair, measured by the larger (second) sum
    int lo = -1, hi = -1;
    for (size_t yi = 0; yi < feasible.size() && hi == -1; ++yi) {
      const int y = feasible[yi];
      for (size_t xi = 0; xi < yi; ++xi) {
        const int x = feasible[xi];
        if (chain_leq(s.point(x), s.point(y), a)) {
          lo = x;
          hi = y;
          break;
        }
      }
    }
    if (hi == -1) {
      if (!feasible.empty()) c.indices.push_back(feasible[0]);
      break;
    }
    c.indices.push_back(lo);
    c.indices.push_back(hi);
    std::vector<int> next;
    for (int i : feasible)
      if (i != hi && i != lo && chain_leq(s.point(hi), s.point(i), a))
        next.push_back(i);
    feasible = std::move(next);
  }
  return c;
}

PointSet poisson_box(double rate, double m, int r, std::uint64_t seed) {
  if (r < 1 || m < 0 || rate < 0) throw InvalidInput("poisson_box: bad parameters");
  Rng rng(seed);
  const double mean = rate * std::pow(m, r);
  std::size_t count = 0;
  if (mean > 0) {
    std::poisson_distribution<long long> pois(mean);
    count = (std::size_t)pois(rng.engine());
  }
  std::vector<double> flat;
  flat.reserve(count * (size_t)r);
  std::uniform_real_distribution<double> uni(0.0, m);
  for (std::size_t i = 0; i < count * (size_t)r; ++i) flat.push_back(uni(rng.engine()));
  return PointSet(r, std::move(flat), std::max(m, 1e-300));
}

}  // namespace om

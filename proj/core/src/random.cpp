#include "om/random.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

#include "om/clique.hpp"
#include "om/errors.hpp"
#include "om/numeric.hpp"
#include "om/parallel.hpp"
#include "om/rng.hpp"

namespace om {

OrderedMatching sample_matching(int r, int n, std::uint64_t seed) {
  if (r < 1 || n < 0) throw InvalidInput("sample_matching: bad parameters");
  std::vector<Vertex> perm((size_t)r * n);
  for (int i = 0; i < r * n; ++i) perm[(size_t)i] = i + 1;
  Rng rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng.engine());
  std::vector<std::vector<Vertex>> edges((size_t)n);
  for (int i = 0; i < n; ++i)
    edges[(size_t)i].assign(perm.begin() + (size_t)i * r,
                            perm.begin() + (size_t)(i + 1) * r);
  return OrderedMatching(r, std::move(edges));
}

namespace {

// Largest set of pairwise disjoint edge spans, in span order: classic
// earliest-finisher greedy, which is exact for the interval order.
long long max_interval_chain(const OrderedMatching& m) {
  const int n = m.size();
  std::vector<int> order((size_t)n);
  for (int i = 0; i < n; ++i) order[(size_t)i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return m.edge(a).back() < m.edge(b).back(); });
  long long count = 0;
  Vertex frontier = 0;
  for (int i : order) {
    if (m.edge(i).front() > frontier) {
      ++count;
      frontier = m.edge(i).back();
    }
  }
  return count;
}

// Longest nesting chain for r=2: after sorting by first vertex, a maximal
// strictly decreasing subsequence of the second vertices.
long long max_nesting_chain(const OrderedMatching& m) {
  const int n = m.size();
  std::vector<int> tails;  // patience tails over -b, strictly increasing
  tails.reserve(256);
  for (int i = 0; i < n; ++i) {
    const int v = -(int)m.edge(i).back();
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return (long long)tails.size();
}

// Exact largest crossing clique for r=2. A crossing clique is an
// increasing (opener, closer) sequence inside the set of edges spanning a
// cut, maximised over cuts. Sweeping the cut left to right, the spanning
// set changes one edge at a time: openers arrive with the largest opener
// so far, and the edge leaving is always the one with the smallest closer,
// i.e. the tail of pile 1. Deletions repair the patience piles by
// demoting a suffix of each pile to its predecessor.
class CrossingSweep {
 public:
  explicit CrossingSweep(const OrderedMatching& m) : m_(&m) {}

  long long run() {
    const int n = m_->size();
    const int verts = 2 * n;
    std::vector<int> closer_of((size_t)verts + 1, 0);
    for (int i = 0; i < n; ++i)
      closer_of[(size_t)m_->edge(i).front()] = m_->edge(i).back();
    long long best = 0;
    for (int pos = 1; pos <= verts; ++pos) {
      if (closer_of[(size_t)pos]) {
        insert(pos, closer_of[(size_t)pos]);
      } else {
        erase_min(pos);
      }
      best = std::max(best, (long long)piles_.size());
    }
    return best;
  }

 private:
  struct Pt {
    int x;  // opener
    int y;  // closer
  };

  void insert(int x, int y) {
    // first pile whose tail closer is >= y (tails increase across piles)
    int lo = 0, hi = (int)piles_.size();
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (piles_[(size_t)mid].back().y < y)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == (int)piles_.size()) piles_.push_back({});
    piles_[(size_t)lo].push_back({x, y});
  }

  void erase_min(int y) {
    // the closing edge is the present minimum closer: tail of pile 1
    assert(!piles_.empty() && !piles_[0].empty() && piles_[0].back().y == y);
    (void)y;
    int removed_x = piles_[0].back().x;
    piles_[0].pop_back();
    for (size_t k = 1; k < piles_.size(); ++k) {
      auto& below = piles_[k - 1];
      auto& pile = piles_[k];
      // points with x > removed_x whose best predecessor is gone form a
      // suffix: y below the new tail of the pile underneath
      const int thr_y =
          below.empty() ? std::numeric_limits<int>::max() : below.back().y;
      size_t cut = pile.size();
      while (cut > 0 && pile[cut - 1].x > removed_x && pile[cut - 1].y <= thr_y)
        --cut;
      if (cut == pile.size()) break;  // cascade over
      const int new_removed_x = pile[(size_t)cut].x;
      below.insert(below.end(), pile.begin() + (long)cut, pile.end());
      pile.resize(cut);
      removed_x = new_removed_x;
    }
    while (!piles_.empty() && piles_.back().empty()) piles_.pop_back();
  }

  const OrderedMatching* m_;
  std::vector<std::vector<Pt>> piles_;
};

}  // namespace

long long exact_LP(const OrderedMatching& m, const Pattern& p) {
  if (m.size() == 0) return 0;
  if (m.uniformity() != p.uniformity())
    throw InvalidInput("exact_LP: uniformity mismatch");
  const int r = p.uniformity();
  const std::string& w = p.word();
  if (w == std::string((size_t)r, 'A') + std::string((size_t)r, 'B'))
    return max_interval_chain(m);
  if (r == 2 && w == "ABBA") return max_nesting_chain(m);
  if (r == 2 && w == "ABAB") return CrossingSweep(m).run();
  return largest_P_clique(m, p).size();
}

EstimateResult estimate_bP(const Pattern& p, int n, int trials,
                           std::uint64_t seed, std::uint64_t budget) {
  if (n < 1 || trials < 1) throw InvalidInput("estimate_bP: bad parameters");
  if (!is_collectable(p))
    throw InvalidInput("estimate_bP: pattern must be collectable");
  if ((std::uint64_t)n * (std::uint64_t)trials > budget)
    throw BudgetExceeded("estimate_bP: n * trials over budget");
  const int r = p.uniformity();
  const double scale = std::pow((double)n, 1.0 / r);
  std::vector<double> values((size_t)trials, 0.0);
  parallel_for(trials, [&](long long t) {
    const Rng stream = Rng(seed).split((std::uint64_t)t);
    const OrderedMatching m = sample_matching(r, n, stream.seed());
    values[(size_t)t] = (double)exact_LP(m, p) / scale;
  });
  EstimateResult res;
  res.trials = trials;
  res.n = n;
  res.seed = seed;
  double mean = 0;
  for (double v : values) mean += v;
  mean /= trials;
  double var = 0;
  for (double v : values) var += (v - mean) * (v - mean);
  var = trials > 1 ? var / (trials - 1) : 0.0;
  res.estimate = mean;
  res.stddev = std::sqrt(var);
  const double half = 1.959963984540054 * res.stddev / std::sqrt((double)trials);
  res.ci_low = mean - half;
  res.ci_high = mean + half;
  return res;
}

namespace {

std::vector<int> block_halves(const Pattern& p) {
  const auto bp = block_partition(p);
  if (!bp) throw InvalidInput("pattern is not collectable");
  std::vector<int> ks;
  ks.reserve(bp->blocks.size());
  for (const auto& b : bp->blocks) ks.push_back(b.half());
  return ks;
}

}  // namespace

double fP_evaluate(const Pattern& p, const std::vector<double>& q) {
  const std::vector<int> ks = block_halves(p);
  const int r = p.uniformity();
  if (q.size() != ks.size())
    throw InvalidInput("fP_evaluate: q length must match the block count");
  double total = 0;
  for (double x : q) {
    if (x < -1e-12) throw InvalidInput("fP_evaluate: q must be nonnegative");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidInput("fP_evaluate: q must sum to 1");
  double f = 1.0;
  for (int i = 2; i <= r; ++i) f *= i;  // r!
  for (size_t i = 0; i < ks.size(); ++i) {
    for (int t = 2; t <= ks[i]; ++t) f /= t;
    f *= std::pow(std::max(q[i], 0.0), ks[i]);
  }
  return f;
}

namespace {

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> u = v;
  std::sort(u.rbegin(), u.rend());
  double css = 0;
  double theta = 0;
  int rho = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    const double t = (css - 1.0) / (double)(i + 1);
    if (u[i] - t > 0) {
      rho = (int)i + 1;
      theta = t;
    }
  }
  (void)rho;
  for (auto& x : v) x = std::max(x - theta, 0.0);
  return v;
}

}  // namespace

double alphaP(const Pattern& p) {
  const std::vector<int> ks = block_halves(p);
  const int l = (int)ks.size();
  const int r = p.uniformity();
  if (l == 1) return 1.0;
  if (l == 2) {
    // single interior maximum at q = (k1/r, k2/r)
    const std::vector<double> q = {(double)ks[0] / r, (double)ks[1] / r};
    return fP_evaluate(p, q);
  }
  // projected gradient with multistart; the stationary point q_i = k_i/r
  // is among the starts
  std::vector<std::vector<double>> starts;
  {
    std::vector<double> s0((size_t)l, 1.0 / l);
    starts.push_back(s0);
    std::vector<double> s1((size_t)l);
    for (int i = 0; i < l; ++i) s1[(size_t)i] = (double)ks[(size_t)i] / r;
    starts.push_back(s1);
    Rng rng(0xa1f4aull);
    for (int s = 0; s < 8; ++s) {
      std::vector<double> q((size_t)l);
      double tot = 0;
      for (auto& x : q) {
        x = -std::log(std::max(rng.uniform(), 1e-12));
        tot += x;
      }
      for (auto& x : q) x /= tot;
      starts.push_back(q);
    }
  }
  double best = 0;
  for (auto q : starts) {
    double step = 0.25;
    double fq = fP_evaluate(p, q);
    for (int it = 0; it < 400; ++it) {
      std::vector<double> g((size_t)l, 0.0);
      for (int i = 0; i < l; ++i)
        g[(size_t)i] = q[(size_t)i] > 1e-14 ? fq * ks[(size_t)i] / q[(size_t)i] : 1.0;
      std::vector<double> cand((size_t)l);
      for (int i = 0; i < l; ++i) cand[(size_t)i] = q[(size_t)i] + step * g[(size_t)i];
      cand = project_simplex(std::move(cand));
      const double fc = fP_evaluate(p, cand);
      if (fc > fq) {
        q = std::move(cand);
        fq = fc;
      } else {
        step *= 0.5;
        if (step < 1e-14) break;
      }
    }
    best = std::max(best, fq);
  }
  return best;
}

}  // namespace om

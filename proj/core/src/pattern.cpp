#include "om/pattern.hpp"

#include <algorithm>
#include <cassert>

#include "om/errors.hpp"
#include "om/numeric.hpp"

namespace om {

Pattern::Pattern(std::string word) : word_(std::move(word)) {
  const size_t len = word_.size();
  if (len == 0 || len % 2 != 0) throw InvalidInput("pattern word length must be 2r");
  if (len > 32) throw InvalidInput("pattern uniformity too large");
  int a = 0, b = 0;
  for (size_t i = 0; i < len; ++i) {
    if (word_[i] == 'A') {
      ++a;
    } else if (word_[i] == 'B') {
      ++b;
      mask_ |= 1u << i;
    } else {
      throw InvalidInput("pattern word must be over {A,B}");
    }
  }
  if (a != b) throw InvalidInput("pattern needs equally many A and B");
  if (word_[0] != 'A') throw InvalidInput("canonical pattern words start with A");
}

Pattern pattern_from_mask(std::uint32_t mask, int r) {
  std::string w(2 * (size_t)r, 'A');
  for (int i = 0; i < 2 * r; ++i)
    if (mask & (1u << i)) w[i] = 'B';
  return Pattern(std::move(w));
}

std::uint32_t pair_mask(std::span<const Vertex> e, std::span<const Vertex> f) {
  // The edge holding the overall minimum plays A.
  if (f[0] < e[0]) std::swap(e, f);
  const int r = (int)e.size();
  std::uint32_t mask = 0;
  int i = 0, j = 0, pos = 0;
  while (i < r || j < r) {
    if (j >= r || (i < r && e[i] < f[j])) {
      ++i;
    } else {
      mask |= 1u << pos;
      ++j;
    }
    ++pos;
  }
  return mask;
}

Pattern pattern_of_pair(const Edge& e, const Edge& f) {
  if (e.uniformity() != f.uniformity())
    throw InvalidInput("pattern_of_pair: uniformity mismatch");
  const auto& a = e.vertices();
  const auto& b = f.vertices();
  for (Vertex x : a)
    if (std::binary_search(b.begin(), b.end(), x))
      throw InvalidInput("pattern_of_pair: edges overlap");
  return pattern_from_mask(pair_mask(e.span(), f.span()), e.uniformity());
}

namespace {

void gen_words(std::string& w, int a_left, int b_left,
               std::vector<Pattern>& out) {
  if (a_left == 0 && b_left == 0) {
    out.push_back(Pattern(w));
    return;
  }
  if (a_left > 0) {
    w.push_back('A');
    gen_words(w, a_left - 1, b_left, out);
    w.pop_back();
  }
  if (b_left > 0) {
    w.push_back('B');
    gen_words(w, a_left, b_left - 1, out);
    w.pop_back();
  }
}

}  // namespace

std::vector<Pattern> enumerate_patterns(int r) {
  if (r < 1) throw InvalidInput("enumerate_patterns: r >= 1 required");
  std::vector<Pattern> out;
  std::string w = "A";
  gen_words(w, r - 1, r, out);  // lexicographic by construction
  return out;
}

std::optional<BlockPartition> block_partition(const Pattern& p) {
  const std::string& w = p.word();
  const int len = (int)w.size();
  BlockPartition bp;
  int start = 0;
  char x = 0, y = 0;
  int cx = 0, cy = 0;
  for (int pos = 0; pos < len; ++pos) {
    const char c = w[pos];
    if (cx == 0) {
      x = c;
      cx = 1;
      continue;
    }
    if (cy == 0) {
      if (c == x) {
        ++cx;
      } else {
        y = c;
        cy = 1;
      }
    } else {
      if (c == x) return std::nullopt;  // third run before the block closed
      ++cy;
    }
    if (cy == cx) {  // close as early as possible; the partition is unique
      bp.blocks.push_back({start, pos + 1, x == 'A'});
      start = pos + 1;
      cx = cy = 0;
    }
  }
  if (cx != 0) return std::nullopt;  // word ended mid-block
  // audit: blocks are X^k Y^k and cover the word
  int cursor = 0;
  for (const auto& b : bp.blocks) {
    assert(b.lo == cursor && (b.hi - b.lo) % 2 == 0);
    cursor = b.hi;
    const int h = b.half();
    for (int t = b.lo; t < b.lo + h; ++t) assert(w[t] == w[b.lo]);
    for (int t = b.lo + h; t < b.hi; ++t) assert(w[t] != w[b.lo]);
  }
  assert(cursor == len);
  return bp;
}

Pattern clip(const Pattern& p, int i, int j) {
  const int r = p.uniformity();
  if (i < 0 || j >= r || i >= j) throw InvalidInput("clip: bad coordinate range");
  std::vector<int> pa, pb;
  pa.reserve(r);
  pb.reserve(r);
  const std::string& w = p.word();
  for (int t = 0; t < 2 * r; ++t) (w[t] == 'A' ? pa : pb).push_back(t);
  // the clipped coordinates i..j of each edge, merged by position
  std::vector<std::pair<int, char>> verts;
  for (int t = i; t <= j; ++t) {
    verts.push_back({pa[t], 'A'});
    verts.push_back({pb[t], 'B'});
  }
  std::sort(verts.begin(), verts.end());
  std::string out;
  const char first = verts.front().second;
  for (auto& [pos, c] : verts) out.push_back(c == first ? 'A' : 'B');
  return Pattern(std::move(out));
}

WeakPattern weak_pattern(const Pattern& p) {
  const int r = p.uniformity();
  std::string letters;
  letters.reserve(r - 1);
  for (int i = 0; i + 1 < r; ++i) {
    const std::string& c = clip(p, i, i + 1).word();
    if (c == "AABB")
      letters.push_back('a');
    else if (c == "ABAB")
      letters.push_back('k');
    else
      letters.push_back('n');
  }
  return WeakPattern(std::move(letters));
}

namespace {

// Criterion (*): every all-alpha clip must be a generalised alignment.
bool star_criterion(const Pattern& p) {
  const int r = p.uniformity();
  const std::string phi = weak_pattern(p).letters();
  for (int i = 0; i + 1 < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      bool all_alpha = true;
      for (int t = i; t < j; ++t) all_alpha &= (phi[(size_t)t] == 'a');
      if (!all_alpha) continue;
      const std::string& c = clip(p, i, j).word();
      const int k = j - i + 1;
      if (c != std::string((size_t)k, 'A') + std::string((size_t)k, 'B'))
        return false;
    }
  }
  return true;
}

}  // namespace

bool is_collectable(const Pattern& p) {
  const bool splittable = block_partition(p).has_value();
  const bool star = star_criterion(p);
  if (splittable != star)
    throw VerificationError("collectability criteria disagree on " + p.word());
  return splittable;
}

bool is_r_partite(const Pattern& p) {
  auto bp = block_partition(p);
  return bp && (int)bp->blocks.size() == p.uniformity();
}

WeakPattern::WeakPattern(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'a' && c != 'k' && c != 'n')
      throw InvalidInput("weak pattern letters must be in {a,k,n}");
}

Pattern collectable_lift(const WeakPattern& w) {
  const std::string& s = w.letters();
  const int r = (int)s.size() + 1;
  std::vector<int> marks;  // 1-based coordinates with a 'k' or 'n'
  for (int t = 0; t < (int)s.size(); ++t)
    if (s[(size_t)t] != 'a') marks.push_back(t + 1);
  std::string word;
  word.reserve(2 * (size_t)r);
  int prev = 0, nu_seen = 0;
  for (size_t l = 0; l <= marks.size(); ++l) {
    const int end = l < marks.size() ? marks[l] : r;
    const int len = end - prev;
    if (nu_seen % 2 == 0)
      word += std::string((size_t)len, 'A') + std::string((size_t)len, 'B');
    else
      word += std::string((size_t)len, 'B') + std::string((size_t)len, 'A');
    if (l < marks.size() && s[(size_t)marks[l] - 1] == 'n') ++nu_seen;
    prev = end;
  }
  Pattern p{std::move(word)};
  assert(weak_pattern(p) == w);
  return p;
}

std::vector<int> pattern_type(const Pattern& p) {
  auto bp = block_partition(p);
  if (!bp) throw InvalidInput("pattern_type: pattern is not collectable");
  std::vector<int> halves;
  halves.reserve(bp->blocks.size());
  for (const auto& b : bp->blocks) halves.push_back(b.half());
  std::sort(halves.rbegin(), halves.rend());
  return halves;
}

namespace {

void gen_triples(std::vector<Vertex>& free, std::vector<std::vector<Vertex>>& edges,
                 int r, const std::function<void(const std::vector<std::vector<Vertex>>&)>& cb) {
  if (free.empty()) {
    cb(edges);
    return;
  }
  // pair the smallest free vertex with every (r-1)-subset of the rest
  std::vector<Vertex> rest(free.begin() + 1, free.end());
  std::vector<int> pick(r - 1);
  const int m = (int)rest.size();
  // iterate (r-1)-subsets of rest
  for (int t = 0; t < r - 1; ++t) pick[t] = t;
  for (;;) {
    std::vector<Vertex> e = {free[0]};
    for (int idx : pick) e.push_back(rest[(size_t)idx]);
    std::vector<Vertex> next;
    next.reserve(m - (r - 1));
    {
      size_t pi = 0;
      for (int idx = 0; idx < m; ++idx) {
        if (pi < pick.size() && pick[pi] == idx) {
          ++pi;
        } else {
          next.push_back(rest[(size_t)idx]);
        }
      }
    }
    edges.push_back(std::move(e));
    gen_triples(next, edges, r, cb);
    edges.pop_back();
    // next combination
    int t = r - 2;
    while (t >= 0 && pick[t] == m - (r - 1) + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int u = t + 1; u < r - 1; ++u) pick[u] = pick[u - 1] + 1;
  }
}

}  // namespace

std::set<Pattern> compose_patterns(const Pattern& p, const Pattern& q) {
  if (p.uniformity() != q.uniformity())
    throw InvalidInput("compose_patterns: uniformity mismatch");
  const int r = p.uniformity();
  std::set<Pattern> out;
  std::vector<Vertex> verts(3 * (size_t)r);
  for (int i = 0; i < 3 * r; ++i) verts[(size_t)i] = i + 1;
  std::vector<std::vector<Vertex>> edges;
  gen_triples(verts, edges, r, [&](const std::vector<std::vector<Vertex>>& es) {
    // generation order sorts edges by first vertex
    if (pair_mask(es[0], es[1]) != p.mask()) return;
    if (pair_mask(es[1], es[2]) != q.mask()) return;
    out.insert(pattern_from_mask(pair_mask(es[0], es[2]), r));
  });
  return out;
}

Signature signature_of(const WeakPattern& w) {
  Signature s;
  const std::string& l = w.letters();
  for (int i = 0; i < (int)l.size(); ++i) {
    if (l[(size_t)i] == 'a') ++s.alpha_count;
    if (l[(size_t)i] == 'n') s.nu_positions.push_back(i + 1);
  }
  return s;
}

std::string Signature::to_string() const {
  std::string s = "w=" + std::to_string(alpha_count) + ";nu={";
  for (size_t i = 0; i < nu_positions.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nu_positions[i]);
  }
  return s + "}";
}

std::vector<std::vector<Pattern>> signature_order(int r) {
  if (r < 2) throw InvalidInput("signature_order: r >= 2 required");
  // all signatures: a nu-position set S and a weight w <= r-1-|S|
  std::vector<Signature> sigs;
  const int bits = r - 1;
  for (std::uint32_t s = 0; s < (1u << bits); ++s) {
    std::vector<int> nu;
    for (int i = 0; i < bits; ++i)
      if (s & (1u << i)) nu.push_back(i + 1);
    for (int w = 0; w <= bits - (int)nu.size(); ++w)
      sigs.push_back({w, nu});
  }
  std::sort(sigs.begin(), sigs.end(), [](const Signature& a, const Signature& b) {
    if (a.alpha_count != b.alpha_count) return a.alpha_count > b.alpha_count;
    return a.nu_positions < b.nu_positions;
  });
  assert((long long)sigs.size() == (long long)(r + 1) * (1ll << (r - 2)));

  std::vector<std::vector<Pattern>> classes(sigs.size());
  for (const Pattern& p : enumerate_patterns(r)) {
    const Signature s = signature_of(weak_pattern(p));
    const auto it = std::find(sigs.begin(), sigs.end(), s);
    assert(it != sigs.end());
    classes[(size_t)(it - sigs.begin())].push_back(p);
  }
  return classes;
}

std::string to_string(const WeakPattern& w) { return w.letters(); }

WeakPattern weak_pattern_from_string(const std::string& s) {
  return WeakPattern(s);
}

}  // namespace om

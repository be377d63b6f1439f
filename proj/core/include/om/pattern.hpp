#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "om/types.hpp"

namespace om {

// An r-pattern: the order type of two disjoint r-edges, written as a word
// over {A,B} of length 2r that starts with A and has r of each letter.
// Equality and hashing are on the word alone.
class Pattern {
 public:
  explicit Pattern(std::string word);

  const std::string& word() const { return word_; }
  int uniformity() const { return (int)(word_.size() / 2); }

  // Bit i set iff word[i] == 'B'. Cheap identity for hot loops (r <= 16).
  std::uint32_t mask() const { return mask_; }

  bool operator==(const Pattern& o) const { return word_ == o.word_; }
  auto operator<=>(const Pattern& o) const { return word_ <=> o.word_; }

 private:
  std::string word_;
  std::uint32_t mask_ = 0;
};

// Contiguous blocks of a splittable pattern; intervals are 0-based,
// half-open [lo, hi) over word positions.
struct BlockPartition {
  struct Block {
    int lo = 0;
    int hi = 0;
    bool a_first = false;  // block reads X..XY..Y with X = A?
    int half() const { return (hi - lo) / 2; }
  };
  std::vector<Block> blocks;
};

// Length r-1 string over {a, k, n}: per consecutive coordinate pair,
// alignment / crossing / nesting.
class WeakPattern {
 public:
  explicit WeakPattern(std::string letters);

  const std::string& letters() const { return letters_; }
  int uniformity() const { return (int)letters_.size() + 1; }

  bool operator==(const WeakPattern& o) const { return letters_ == o.letters_; }
  auto operator<=>(const WeakPattern& o) const { return letters_ <=> o.letters_; }

 private:
  std::string letters_;
};

// (#a letters, positions of n letters). Positions are 1-based indices into
// the weak pattern, kept sorted. weight() is the alpha count.
struct Signature {
  int alpha_count = 0;
  std::vector<int> nu_positions;

  int weight() const { return alpha_count; }
  std::string to_string() const;
  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

// ---- pattern construction and classification ----

// Canonical word of the order type of {e, f}; the edge holding the overall
// smallest vertex is labelled A. Throws InvalidInput on overlap or
// uniformity mismatch.
Pattern pattern_of_pair(const Edge& e, const Edge& f);

// Same, over raw sorted vertex spans (hot path; no allocation beyond word).
std::uint32_t pair_mask(std::span<const Vertex> e, std::span<const Vertex> f);
Pattern pattern_from_mask(std::uint32_t mask, int r);

// Pattern formed by edges i < j of M (by first vertex), as a mask.
inline std::uint32_t pair_mask(const OrderedMatching& m, int i, int j) {
  return pair_mask(m.edge(i), m.edge(j));
}

// All (2r)!/(2*(r!)^2) canonical r-patterns, lexicographic by word.
std::vector<Pattern> enumerate_patterns(int r);

// Unique block partition if P is splittable.
std::optional<BlockPartition> block_partition(const Pattern& p);

// Splittability, cross-checked against the all-alpha clip criterion;
// the two tests must agree (audited with an assert).
bool is_collectable(const Pattern& p);

// Collectable with exactly r blocks.
bool is_r_partite(const Pattern& p);

// Sub-pattern on coordinates i..j (0-based, inclusive) of both edges,
// re-canonicalized.
Pattern clip(const Pattern& p, int i, int j);

// phi(P): letter i classifies clip(P, i, i+1).
WeakPattern weak_pattern(const Pattern& p);

// psi(W): the unique collectable pattern with weak_pattern == W, built
// block by block (orientation flips at every 'n').
Pattern collectable_lift(const WeakPattern& w);

// Multiset of half block sizes, sorted descending. Throws for
// non-collectable input.
std::vector<int> pattern_type(const Pattern& p);

// P o Q: every pattern formed by (e,g) over all size-3 matchings on
// {1..3r} where (e,f) forms P and (f,g) forms Q. Exhaustive.
std::set<Pattern> compose_patterns(const Pattern& p, const Pattern& q);

Signature signature_of(const WeakPattern& w);

// The b = (r+1)*2^(r-2) signature classes, descending weight, ties by
// lexicographic nu_positions. Class i holds every r-pattern whose weak
// pattern has signature sigma_i; together they partition all r-patterns.
std::vector<std::vector<Pattern>> signature_order(int r);

// Serialization helpers ("AABBBA", "an", "w=1;nu={2}").
std::string to_string(const WeakPattern& w);
WeakPattern weak_pattern_from_string(const std::string& s);

}  // namespace om

template <>
struct std::hash<om::Pattern> {
  size_t operator()(const om::Pattern& p) const {
    return std::hash<std::string>()(p.word());
  }
};

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "om/clique.hpp"
#include "om/pattern.hpp"
#include "om/types.hpp"

namespace om {

struct MirskyResult {
  bool is_chain = false;
  std::vector<int> elements;  // ascending ground positions
};

// Audit settings for relations that are supposed to be transitive: full
// cubic check up to `full_limit` elements, seeded random triples beyond.
struct TransitivityAudit {
  long long full_limit = 300;
  long long samples = 200'000;
  std::uint64_t seed = 0xa17d5eedULL;
};

// e <= f iff e == f, or e comes first and (e,f) forms a pattern of the
// class set. Ground holds edge indices of m in ascending order, so
// less(a,b) is only possible for a < b.
class PosetRelation {
 public:
  PosetRelation(const OrderedMatching& m, std::vector<int> ground,
                const std::vector<Pattern>& classes);

  int size() const { return (int)ground_.size(); }
  const std::vector<int>& ground() const { return ground_; }
  bool less(int a, int b) const;  // ground positions, a != b

  // Throws VerificationError on any witnessed violation.
  void audit_transitivity(const TransitivityAudit& opts = {}) const;

 private:
  const OrderedMatching* m_;
  std::vector<int> ground_;
  std::vector<std::uint32_t> masks_;  // sorted class masks
};

// Generic Mirsky pass over a relation given as a callable on 0..n-1
// (less(i,j) may hold only for i < j). Returns a chain of length >= x when
// one exists, otherwise the largest height level (lowest level on ties),
// which is an antichain of size >= n/x.
MirskyResult mirsky_decompose(int n, const std::function<bool(int, int)>& less,
                              double x);

MirskyResult mirsky_decompose(const PosetRelation& rel, double x,
                              const TransitivityAudit& audit = {});

// Signature-ladder pipeline (one Mirsky pass per class): a verified clique of
// size >= n^(1/b) / (r-1) with b = (r+1)*2^(r-2).
std::pair<Pattern, CliqueCertificate> find_clique_general(const OrderedMatching& m);

// Sharp r=3 pipeline (seven Mirsky stages): verified clique of size
// >= n^(1/7) / 2.
std::pair<Pattern, CliqueCertificate> find_clique_r3(const OrderedMatching& m);

// M'-blow-up M[M']: every vertex of m becomes an interval of |M'| vertices
// and every edge carries a copy of mp on its intervals.
OrderedMatching blowup(const OrderedMatching& m, const OrderedMatching& mp);

// Iterated blow-up of the 2^(r-1) canonical r-partite cliques of size n:
// an r-partite matching of size n^(2^(r-1)) whose largest P-clique is n
// for every r-partite P.
OrderedMatching partite_es_construction(int r, int n);

// Inductive construction of size n^(2^r - 1) with L(M) = n.
OrderedMatching ramsey_construction(int r, int n);

struct RamseyOracleResult {
  int value = 0;
  OrderedMatching witness;
};

// L_r(n): exact minimum of L(M) over all matchings of size n, with one
// minimizing witness. Exhaustive; parallel over the first edge's choice.
RamseyOracleResult brute_force_ramsey(int r, int n,
                                      std::uint64_t budget = 100'000'000ull);

// Extraction from a classes-clique via the type pigeonhole. The class set
// must be left- or right-dominated (checked through compose_patterns).
CliqueCertificate dominated_extract(const OrderedMatching& m,
                                    const std::vector<Pattern>& classes);

}  // namespace om

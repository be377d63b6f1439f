#pragma once

#include <utility>
#include <vector>

#include "om/pattern.hpp"
#include "om/types.hpp"

namespace om {

// A clique witness: edge indices into a matching (ascending, i.e. sorted by
// first vertex) whose pairs all form `pattern`.
struct CliqueCertificate {
  Pattern pattern;
  std::vector<int> edge_indices;

  int size() const { return (int)edge_indices.size(); }
};

// True iff every pair of certified edges forms cert.pattern. This is the
// independent checker used on every certificate the library hands out.
bool verify_certificate(const OrderedMatching& m, const CliqueCertificate& cert);

// L_P(M) with witness. Exact: longest-path when the pairwise-P relation is
// transitive on this instance, branch and bound otherwise. A nonempty
// matching always yields size >= 1; empty M yields a size-0 certificate.
CliqueCertificate largest_P_clique(const OrderedMatching& m, const Pattern& p);

// L(M) = max_P L_P(M) with the maximizing pattern; ties broken by
// lexicographically smallest word. Requires a nonempty matching.
std::pair<Pattern, CliqueCertificate> largest_clique(const OrderedMatching& m);

// P^(m): the unique P-clique of size m on {1..rm}. Non-collectable P is
// only feasible for m <= 2.
OrderedMatching canonical_clique(const Pattern& p, int m);

// Given a W-clique M (verified, else VerificationError), extracts a
// psi(W)-clique of size >= ceil(|M| / max(1, delta(W))) by taking every
// delta-th edge, delta(W) = longest run of 'a' in W.
CliqueCertificate weak_clique_extract(const OrderedMatching& m, const WeakPattern& w);

// True iff no size-3 matching on {1..3r} is a P-clique for any
// non-collectable P (exhaustive).
bool non_collectable_max_clique_check(int r);

}  // namespace om

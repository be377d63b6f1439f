#include "doctest.h"

#include <map>
#include <set>

#include "om/clique.hpp"
#include "om/enumeration.hpp"
#include "om/errors.hpp"
#include "om/pattern.hpp"

using namespace om;

namespace {

Edge E(std::vector<Vertex> v) { return Edge(std::move(v)); }

// All ten 3-patterns with their weak patterns, as tabulated in the paper.
const std::map<std::string, std::string> kWeak3 = {
    {"AAABBB", "aa"}, {"AABABB", "aa"}, {"AABBBA", "an"}, {"AABBAB", "ak"},
    {"ABBBAA", "na"}, {"ABBAAB", "nn"}, {"ABBABA", "nk"}, {"ABAABB", "ka"},
    {"ABABBA", "kn"}, {"ABABAB", "kk"}};

}  // namespace

TEST_CASE("pattern word validation") {
  CHECK_THROWS_AS(Pattern("BBAA"), InvalidInput);   // must start with A
  CHECK_THROWS_AS(Pattern("AAB"), InvalidInput);    // odd length
  CHECK_THROWS_AS(Pattern("AABA"), InvalidInput);   // unbalanced
  CHECK_THROWS_AS(Pattern("AXBB"), InvalidInput);   // alphabet
  CHECK(Pattern("AABB").uniformity() == 2);
}

TEST_CASE("pattern_of_pair basics") {
  CHECK(pattern_of_pair(E({1, 2}), E({3, 4})).word() == "AABB");
  CHECK(pattern_of_pair(E({1, 3}), E({2, 4})).word() == "ABAB");
  CHECK(pattern_of_pair(E({2, 5, 9}), E({1, 6, 7})).word() == "ABBAAB");
  // orientation: the edge with the global minimum is A, argument order moot
  CHECK(pattern_of_pair(E({1, 6, 7}), E({2, 5, 9})).word() == "ABBAAB");
  CHECK_THROWS_AS(pattern_of_pair(E({1, 2}), E({2, 3})), InvalidInput);
  CHECK_THROWS_AS(pattern_of_pair(E({1, 2}), E({3, 4, 5})), InvalidInput);
}

TEST_CASE("pattern census") {
  CHECK(enumerate_patterns(1).size() == 1);
  CHECK(enumerate_patterns(2).size() == 3);
  CHECK(enumerate_patterns(3).size() == 10);
  CHECK(enumerate_patterns(4).size() == 35);
  CHECK(enumerate_patterns(5).size() == 126);
  // lexicographic and deduplicated
  const auto p4 = enumerate_patterns(4);
  CHECK(std::is_sorted(p4.begin(), p4.end()));
  CHECK(std::adjacent_find(p4.begin(), p4.end()) == p4.end());
}

TEST_CASE("block partition") {
  const auto bp = block_partition(Pattern("AABBABBA"));
  REQUIRE(bp.has_value());
  REQUIRE(bp->blocks.size() == 3);
  CHECK(bp->blocks[0].lo == 0);
  CHECK(bp->blocks[0].hi == 4);
  CHECK(bp->blocks[1].lo == 4);
  CHECK(bp->blocks[1].hi == 6);
  CHECK(bp->blocks[2].lo == 6);
  CHECK(bp->blocks[2].hi == 8);
  CHECK(bp->blocks[2].a_first == false);

  const auto cross = block_partition(Pattern("ABAB"));
  REQUIRE(cross.has_value());
  CHECK(cross->blocks.size() == 2);

  CHECK(!block_partition(Pattern("AABABB")).has_value());
}

TEST_CASE("collectable and r-partite counts") {
  CHECK_FALSE(is_collectable(Pattern("AABABB")));
  CHECK(is_r_partite(Pattern("ABAB")));
  CHECK_FALSE(is_r_partite(Pattern("AABB")));
  for (int r = 2; r <= 5; ++r) {
    long long coll = 0, part = 0, total = 0;
    for (const auto& p : enumerate_patterns(r)) {
      ++total;
      if (is_collectable(p)) ++coll;
      if (is_r_partite(p)) ++part;
    }
    long long want_coll = 1, want_part = 1;
    for (int i = 1; i < r; ++i) {
      want_coll *= 3;
      want_part *= 2;
    }
    CHECK(coll == want_coll);
    CHECK(part == want_part);
  }
}

TEST_CASE("weak patterns match the r=3 table") {
  for (const auto& [word, weak] : kWeak3)
    CHECK(weak_pattern(Pattern(word)).letters() == weak);
  CHECK(weak_pattern(Pattern("AABBABBA")).letters() == "akn");
}

TEST_CASE("collectable lift") {
  CHECK(collectable_lift(WeakPattern("an")).word() == "AABBBA");
  CHECK(collectable_lift(WeakPattern("kk")).word() == "ABABAB");
  // phi(psi(W)) = W for every weak pattern, r <= 5
  for (int r = 2; r <= 5; ++r) {
    std::vector<std::string> weaks = {""};
    for (int i = 1; i < r; ++i) {
      std::vector<std::string> next;
      for (const auto& w : weaks)
        for (char c : {'a', 'k', 'n'}) next.push_back(w + c);
      weaks = std::move(next);
    }
    for (const auto& w : weaks) {
      const Pattern p = collectable_lift(WeakPattern(w));
      CHECK(is_collectable(p));
      CHECK(weak_pattern(p).letters() == w);
    }
  }
  // psi(phi(P)) = P for every collectable P, r <= 5
  for (int r = 2; r <= 5; ++r)
    for (const auto& p : enumerate_patterns(r))
      if (is_collectable(p)) CHECK(collectable_lift(weak_pattern(p)) == p);
}

TEST_CASE("clip") {
  CHECK(clip(Pattern("AABB"), 0, 1).word() == "AABB");
  CHECK(clip(Pattern("AABBBA"), 1, 2).word() == "ABBA");
  CHECK(clip(Pattern("ABABAB"), 0, 1).word() == "ABAB");
  CHECK_THROWS_AS(clip(Pattern("AABB"), 0, 2), InvalidInput);
  CHECK_THROWS_AS(clip(Pattern("AABB"), 1, 1), InvalidInput);
}

TEST_CASE("pattern type") {
  CHECK(pattern_type(Pattern("AABBABBA")) == std::vector<int>{2, 1, 1});
  CHECK(pattern_type(Pattern("ABAABBAB")) == std::vector<int>{2, 1, 1});
  CHECK(pattern_type(Pattern("ABAB")) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(pattern_type(Pattern("AABABB")), InvalidInput);
}

TEST_CASE("coordinate comparisons follow the nu parity rule") {
  // e[i] < f[i] iff the number of 'n's among the first i-1 weak letters is
  // even; exhaustive for r <= 4
  for (int r = 2; r <= 4; ++r) {
    for (const auto& p : enumerate_patterns(r)) {
      std::vector<int> pa, pb;
      for (int t = 0; t < 2 * r; ++t)
        (p.word()[(size_t)t] == 'A' ? pa : pb).push_back(t);
      const std::string w = weak_pattern(p).letters();
      int nus = 0;
      for (int i = 0; i < r; ++i) {
        if (i > 0 && w[(size_t)i - 1] == 'n') ++nus;
        CHECK((pa[(size_t)i] < pb[(size_t)i]) == (nus % 2 == 0));
      }
    }
  }
}

TEST_CASE("composition of 2-patterns") {
  const Pattern a("AABB"), k("ABAB"), n("ABBA");
  CHECK(compose_patterns(a, a) == std::set<Pattern>{a});
  CHECK(compose_patterns(n, a) == std::set<Pattern>{a, n, k});
  CHECK(compose_patterns(a, n) == std::set<Pattern>{a});
}

TEST_CASE("weak composition rules hold on every realizable triple") {
  for (int r = 2; r <= 3; ++r) {
    enumerate_matchings(r, 3, [&](const OrderedMatching& m) {
      const auto wef = weak_pattern(pattern_from_mask(pair_mask(m, 0, 1), r)).letters();
      const auto wfg = weak_pattern(pattern_from_mask(pair_mask(m, 1, 2), r)).letters();
      const auto weg = weak_pattern(pattern_from_mask(pair_mask(m, 0, 2), r)).letters();
      bool same_nu = true;
      for (int i = 0; i < r - 1; ++i)
        same_nu &= (wef[(size_t)i] == 'n') == (wfg[(size_t)i] == 'n');
      if (same_nu) {
        for (int i = 0; i < r - 1; ++i) {
          if (wef[(size_t)i] == 'n' && wfg[(size_t)i] == 'n')
            CHECK(weg[(size_t)i] == 'n');
          if (wef[(size_t)i] == 'a' || wfg[(size_t)i] == 'a')
            CHECK(weg[(size_t)i] == 'a');
          if (wef[(size_t)i] == 'k' && wfg[(size_t)i] == 'k')
            CHECK(weg[(size_t)i] != 'n');
          if (wef[(size_t)i] != 'n' && wfg[(size_t)i] != 'n')
            CHECK(weg[(size_t)i] != 'n');
        }
      }
      return true;
    });
  }
}

TEST_CASE("signatures") {
  const Signature s = signature_of(WeakPattern("ank"));
  CHECK(s.alpha_count == 1);
  CHECK(s.nu_positions == std::vector<int>{2});
  CHECK(s.to_string() == "w=1;nu={2}");

  CHECK(signature_order(2).size() == 3);
  CHECK(signature_order(3).size() == 8);
  CHECK(signature_order(4).size() == 20);

  // classes partition all patterns (r <= 4), descending weight
  for (int r = 2; r <= 4; ++r) {
    const auto classes = signature_order(r);
    std::set<Pattern> seen;
    size_t total = 0;
    int last_weight = r;
    for (const auto& cls : classes) {
      REQUIRE(!cls.empty());
      const int w = signature_of(weak_pattern(cls[0])).weight();
      CHECK(w <= last_weight);
      last_weight = w;
      for (const auto& p : cls) {
        CHECK(signature_of(weak_pattern(p)) == signature_of(weak_pattern(cls[0])));
        seen.insert(p);
        ++total;
      }
    }
    CHECK(total == enumerate_patterns(r).size());
    CHECK(seen.size() == total);
  }
}

namespace {

// Appendix subsets for r = 4, used to filter composition tables.
std::set<Pattern> appendix_class(int i) {
  auto psi = [](const std::string& w) { return collectable_lift(WeakPattern(w)); };
  switch (i) {
    case 1:
      return {psi("aaa"), Pattern("AAABABBB"), Pattern("AAABBABB"),
              Pattern("AABAABBB"), Pattern("AABABABB")};
    case 2:
      return {psi("aak"), Pattern("AABABBAB"), psi("aka"), psi("kaa"),
              Pattern("ABAABABB")};
    case 3:
      return {psi("aan"), psi("ana"), psi("naa")};
    case 4:
      return {Pattern("AABABBBA"), Pattern("ABBBABAA")};
    case 5:
      return {psi("akk"), psi("kak"), psi("kka")};
    case 6:
      return {psi("ann"), psi("nan"), psi("nna")};
    default:
      return {psi("akn"), psi("ank"), psi("nak"), psi("nka"), psi("kan"),
              psi("kna")};
  }
}

std::set<Pattern> filtered_compose(const Pattern& p, const Pattern& q,
                                   int upto_class) {
  std::set<Pattern> out = compose_patterns(p, q);
  for (int i = 1; i <= upto_class; ++i)
    for (const auto& gone : appendix_class(i)) out.erase(gone);
  return out;
}

}  // namespace

TEST_CASE("appendix table: compositions within the generalised nestings") {
  auto psi = [](const std::string& w) { return collectable_lift(WeakPattern(w)); };
  const Pattern ann = psi("ann"), nan = psi("nan"), nna = psi("nna");
  using S = std::set<Pattern>;
  CHECK(filtered_compose(ann, ann, 5) == S{ann});
  CHECK(filtered_compose(ann, nan, 5) == S{ann});
  CHECK(filtered_compose(ann, nna, 5) == S{});
  CHECK(filtered_compose(nan, ann, 5) == S{nan});
  CHECK(filtered_compose(nan, nan, 5) == S{nan});
  CHECK(filtered_compose(nan, nna, 5) == S{nna});
  // the (nna, ann) cell is not pinned by the paper
  CHECK(filtered_compose(nna, nan, 5) == S{nan});
  CHECK(filtered_compose(nna, nna, 5) == S{nna});
}

TEST_CASE("appendix table: compositions among the mixed weight-1 patterns") {
  auto psi = [](const std::string& w) { return collectable_lift(WeakPattern(w)); };
  const Pattern ank = psi("ank"), akn = psi("akn"), nak = psi("nak"),
                nka = psi("nka"), kan = psi("kan"), kna = psi("kna");
  using S = std::set<Pattern>;
  // row ank
  CHECK(filtered_compose(ank, ank, 6) == S{ank});
  CHECK(filtered_compose(ank, akn, 6) == S{ank, akn});
  CHECK(filtered_compose(ank, nak, 6) == S{ank});
  CHECK(filtered_compose(ank, nka, 6) == S{});
  CHECK(filtered_compose(ank, kan, 6) == S{ank, akn});
  CHECK(filtered_compose(ank, kna, 6) == S{});
  // row akn
  CHECK(filtered_compose(akn, ank, 6) == S{ank, akn});
  CHECK(filtered_compose(akn, akn, 6) == S{akn});
  CHECK(filtered_compose(akn, nak, 6) == S{ank});
  CHECK(filtered_compose(akn, nka, 6) == S{ank, akn});
  CHECK(filtered_compose(akn, kan, 6) == S{});
  CHECK(filtered_compose(akn, kna, 6) == S{ank, akn});
  // row nak (two cells unpinned)
  CHECK(filtered_compose(nak, ank, 6) == S{nak});
  CHECK(filtered_compose(nak, nak, 6) == S{nak});
  CHECK(filtered_compose(nak, nka, 6) == S{});
  CHECK(filtered_compose(nak, kna, 6) == S{});
  // row nka
  CHECK(filtered_compose(nka, ank, 6) == S{nka, kna});
  CHECK(filtered_compose(nka, akn, 6) == S{nka, kna});
  CHECK(filtered_compose(nka, nak, 6) == S{});
  CHECK(filtered_compose(nka, nka, 6) == S{nka});
  CHECK(filtered_compose(nka, kan, 6) == S{kna});
  CHECK(filtered_compose(nka, kna, 6) == S{nka, kna});
  // row kan (two cells unpinned)
  CHECK(filtered_compose(kan, ank, 6) == S{});
  CHECK(filtered_compose(kan, akn, 6) == S{});
  CHECK(filtered_compose(kan, kan, 6) == S{kan});
  CHECK(filtered_compose(kan, kna, 6) == S{kan});
  // row kna
  CHECK(filtered_compose(kna, ank, 6) == S{});
  CHECK(filtered_compose(kna, akn, 6) == S{});
  CHECK(filtered_compose(kna, nak, 6) == S{nka, kna});
  CHECK(filtered_compose(kna, nka, 6) == S{nka, kna});
  CHECK(filtered_compose(kna, kan, 6) == S{kna});
  CHECK(filtered_compose(kna, kna, 6) == S{kna});
}

TEST_CASE("non-collectable r=4 names have the advertised weak patterns") {
  CHECK(weak_pattern(Pattern("AAABABBB")).letters() == "aaa");
  CHECK(weak_pattern(Pattern("AAABBABB")).letters() == "aaa");
  CHECK(weak_pattern(Pattern("AABAABBB")).letters() == "aaa");
  CHECK(weak_pattern(Pattern("AABABABB")).letters() == "aaa");
  CHECK(weak_pattern(Pattern("AABABBBA")).letters() == "aan");
  CHECK(weak_pattern(Pattern("AABABBAB")).letters() == "aak");
  CHECK(weak_pattern(Pattern("ABBBABAA")).letters() == "naa");
  CHECK(weak_pattern(Pattern("ABAABABB")).letters() == "kaa");
  for (const auto& w : {"AAABABBB", "AAABBABB", "AABAABBB", "AABABABB",
                        "AABABBBA", "AABABBAB", "ABBBABAA", "ABAABABB"})
    CHECK_FALSE(is_collectable(Pattern(w)));
}

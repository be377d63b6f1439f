#include "doctest.h"

#include <sstream>

#include "om/errors.hpp"
#include "om/io.hpp"

using namespace om;

TEST_CASE("matching text round trip") {
  const OrderedMatching m(3, {{1, 4, 5}, {2, 3, 6}});
  std::stringstream ss;
  write_matching(ss, m);
  CHECK(ss.str() == "3 6\n1 4 5\n2 3 6\n");
  CHECK(read_matching(ss) == m);

  std::stringstream bad("2 4\n1 2\n1 3\n");
  CHECK_THROWS_AS(read_matching(bad), InvalidInput);
  std::stringstream trunc("2 4\n1 2\n");
  CHECK_THROWS_AS(read_matching(trunc), InvalidInput);
}

TEST_CASE("hypergraph text round trip") {
  const OrderedHypergraph g(2, 5, {{1, 3}, {2, 5}, {1, 2}});
  std::stringstream ss;
  write_hypergraph(ss, g);
  CHECK(read_hypergraph(ss) == g);
}

TEST_CASE("points round trip") {
  const PointSet s(2, {0.25, 0.5, 1.0, 0.0}, 1.0);
  std::stringstream ss;
  write_points(ss, s);
  const PointSet t = read_points(ss);
  CHECK(t.dim() == 2);
  CHECK(t.size() == 2);
  CHECK(t.point(1)[0] == doctest::Approx(1.0));
}

TEST_CASE("certificate json") {
  const CliqueCertificate cert{Pattern("ABAB"), {0, 2, 5}};
  CHECK(certificate_to_json(cert, true) ==
        R"({"indices":[0,2,5],"pattern":"ABAB","size":3,"verified":true})");
}

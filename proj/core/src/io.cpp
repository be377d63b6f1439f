#include "om/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "om/errors.hpp"

namespace om {

void write_matching(std::ostream& os, const OrderedMatching& m) {
  os << m.uniformity() << ' ' << m.vertex_count() << '\n';
  for (int i = 0; i < m.size(); ++i) {
    const auto e = m.edge(i);
    for (int t = 0; t < m.uniformity(); ++t) os << (t ? " " : "") << e[(size_t)t];
    os << '\n';
  }
}

OrderedMatching read_matching(std::istream& is) {
  int r = 0, n = 0;
  if (!(is >> r >> n)) throw InvalidInput("matching: missing 'r n' header");
  if (r < 1 || n < 0 || n % r != 0)
    throw InvalidInput("matching: vertex count must be a multiple of r");
  std::vector<std::vector<Vertex>> edges((size_t)(n / r));
  for (auto& e : edges) {
    e.resize((size_t)r);
    for (auto& v : e)
      if (!(is >> v)) throw InvalidInput("matching: truncated edge list");
  }
  return OrderedMatching(r, std::move(edges));
}

void write_hypergraph(std::ostream& os, const OrderedHypergraph& g) {
  os << g.uniformity() << ' ' << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) {
    for (size_t t = 0; t < e.size(); ++t) os << (t ? " " : "") << e[t];
    os << '\n';
  }
}

OrderedHypergraph read_hypergraph(std::istream& is) {
  int r = 0, n = 0;
  if (!(is >> r >> n)) throw InvalidInput("hypergraph: missing 'r n' header");
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> e((size_t)r);
  while (is >> e[0]) {
    for (int t = 1; t < r; ++t)
      if (!(is >> e[(size_t)t])) throw InvalidInput("hypergraph: truncated edge");
    edges.push_back(e);
  }
  return OrderedHypergraph(r, n, std::move(edges));
}

void write_points(std::ostream& os, const PointSet& s) {
  os << s.dim() << ' ' << s.size() << ' ' << s.box_side() << '\n';
  for (int i = 0; i < s.size(); ++i) {
    const auto p = s.point(i);
    for (int t = 0; t < s.dim(); ++t) os << (t ? " " : "") << p[(size_t)t];
    os << '\n';
  }
}

PointSet read_points(std::istream& is) {
  int r = 0, k = 0;
  double box = 1.0;
  if (!(is >> r >> k >> box)) throw InvalidInput("points: missing 'r k box' header");
  std::vector<double> flat((size_t)r * k);
  for (auto& x : flat)
    if (!(is >> x)) throw InvalidInput("points: truncated coordinate list");
  return PointSet(r, std::move(flat), box);
}

std::string certificate_to_json(const CliqueCertificate& cert, bool verified) {
  nlohmann::json j;
  j["pattern"] = cert.pattern.word();
  j["indices"] = cert.edge_indices;
  j["size"] = cert.size();
  j["verified"] = verified;
  return j.dump();
}

}  // namespace om

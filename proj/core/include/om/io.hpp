#pragma once

#include <iosfwd>
#include <string>

#include "om/chains.hpp"
#include "om/clique.hpp"
#include "om/types.hpp"

namespace om {

// Edge-list text format shared by matchings and hypergraphs:
// header line "r n" with n the number of vertices, then one edge per
// line, r space-separated vertices.
void write_matching(std::ostream& os, const OrderedMatching& m);
OrderedMatching read_matching(std::istream& is);

void write_hypergraph(std::ostream& os, const OrderedHypergraph& g);
OrderedHypergraph read_hypergraph(std::istream& is);

// Point sets: header "r k box_side", then k rows of r coordinates.
void write_points(std::ostream& os, const PointSet& s);
PointSet read_points(std::istream& is);

// {"pattern": .., "indices": [..], "size": ..}
std::string certificate_to_json(const CliqueCertificate& cert, bool verified);

}  // namespace om

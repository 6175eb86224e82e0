#pragma once

#include "mpcross/template.hpp"
#include "mpcross/witness.hpp"

#include <utility>
#include <vector>

namespace mpcross::testsupport {

// Crossing pairs of the multipartite drawing obtained by expanding a
// complete-graph witness geometrically: each class vertex becomes a box
// holding its n points right to left, each witness edge becomes a ribbon
// carrying the n^2 strands of its class pair as a parallel bundle, and
// strands fan out straight from the points to the ribbon mouths. Bundles
// to plus-side classes leave through the top of the box, left to right in
// plus order; minus-side bundles leave through the bottom, right to left.
// Crossings then arise in exactly three ways: fan inversions between two
// bundles of one box, fan inversions at the two ends of a single ribbon,
// and ribbon intersections wherever the witness edges cross. Computed
// from those local rules, independently of the drawing builder.
std::vector<std::pair<Edge, Edge>> expansion_crossings(const Template& t, int n,
                                                       const PlanarizedWitness& w);

} // namespace mpcross::testsupport

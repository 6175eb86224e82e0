#pragma once

#include "mpcross/drawing.hpp"

namespace mpcross {

// A drawing whose vertices lie on a circle in the given clockwise order,
// with all edges drawn inside the disk. Two edges cross exactly when their
// endpoint pairs interleave along the circle.
struct OnePageDrawing {
    CyclicOrder bounding_order;
    std::vector<Edge> edges;
};

// Expands a one-page drawing to its abstract drawing: classes are grouped
// by class label, crossings are the interleaved independent edge pairs, and
// every rotation is the bounding order restricted to the relevant vertices.
AbstractDrawing from_onepage(const OnePageDrawing& p);

// True when the sub-drawing of d on edge_set has exactly the crossings, with
// the same crossing rotations, of the one-page drawing with this bounding
// order.
bool is_rho_drawing(const AbstractDrawing& d, const CyclicOrder& rho,
                    const std::vector<Edge>& edge_set);

// True when every pair of edges ab, a'b' with a before a' in A and b before
// b' in B crosses in d with rotation [a, a', b, b']. Checks nothing else.
bool is_natural_pair(const AbstractDrawing& d, const Permutation& A, const Permutation& B);

// Cyclic order of a signed concatenation, e.g. {{+1, A}, {-1, B}} reads
// A forward then B backward.
CyclicOrder signed_cycle(const std::vector<std::pair<int, Permutation>>& parts);

} // namespace mpcross

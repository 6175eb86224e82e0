#pragma once

#include "mpcross/drawing.hpp"
#include "mpcross/rotation_system.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mpcross {

// A planarized drawing certifying that a rotation system is realizable:
// crossings become degree-4 nodes, and the clockwise dart rotations define
// an embedding on the sphere.
struct PlanarizedWitness {
    struct WNode {
        bool crossing = false;
        int vid = -1;      // vertex index, real nodes only
        int e1 = -1, e2 = -1; // crossing edge ids, e1 < e2
    };
    struct WDart {
        int edge = -1; // original edge id
        int to = -1;   // node reached by this segment
    };

    RotationSystem system;
    std::vector<WNode> nodes;
    std::vector<std::vector<WDart>> rotations; // clockwise, per node
    std::vector<std::vector<int>> segment_map; // per edge: node path, min endpoint first
};

// Embedding-level checks: twin darts match up, the map is connected and has
// Euler characteristic 2, crossing nodes are proper transversal crossings,
// no edge pair crosses twice, real rotations restrict to the prescribed
// system, and the segment map traces every edge. Empty result means valid.
std::vector<std::string> check_witness(const PlanarizedWitness& w);

// The abstract drawing carried by a valid witness: each class holds the
// vertices whose labels share a class number, rotations come from the real
// nodes, and each crossing node yields one crossing record whose rotation
// lists the endpoint reached by each dart in clockwise order.
AbstractDrawing crossings_of_witness(const PlanarizedWitness& w);

nlohmann::ordered_json witness_to_json(const PlanarizedWitness& w);
PlanarizedWitness witness_from_json(const nlohmann::json& j);

} // namespace mpcross

#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace mpcross {

// A graph with a prescribed clockwise cyclic order of neighbours at every
// vertex. Vertices are kept by index into labels; edges are index pairs
// with the smaller index first.
struct RotationSystem {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges; // sorted
    std::vector<std::vector<int>> rot;      // rot[v]: neighbour indices, cyclic

    int vertex_count() const { return int(labels.size()); }
    int edge_count() const { return int(edges.size()); }
    int index_of(const std::string& label) const; // -1 when absent
    int edge_id(int a, int b) const;              // -1 when absent
    bool is_complete() const;

    void sort_edges();
};

// Structural problems, empty when well formed: label uniqueness, edge
// endpoints, and rotations listing exactly the neighbour sets.
std::vector<std::string> validate_rs(const RotationSystem& rs);

// Induced subsystem on the given vertex indices (order kept).
RotationSystem restrict_rs(const RotationSystem& rs, const std::vector<int>& keep);

nlohmann::ordered_json rs_to_json(const RotationSystem& rs);
RotationSystem rs_from_json(const nlohmann::json& j);
RotationSystem load_rs(const std::string& path);

} // namespace mpcross

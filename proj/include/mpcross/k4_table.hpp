#pragma once

#include "mpcross/realize.hpp"

#include <json.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace mpcross {

// Verdict for one labelled rotation system of the complete graph on the
// vertices 1..4. When realizable, every completion carries the same
// crossing pair, recorded as ids into system.edges; an empty optional on a
// realizable entry means the drawing is crossing-free.
struct K4Entry {
    RotationSystem system;
    bool realizable = false;
    std::optional<std::pair<int, int>> crossing_edges;
};

// All 16 labelled systems: each vertex orders its three neighbours in one
// of two cyclic orders, selected by bit v-1 of the entry index. Built once
// per process by exhaustive route search over every system.
const std::vector<K4Entry>& k4_table();

nlohmann::ordered_json k4_table_to_json(const std::vector<K4Entry>& table);
std::vector<K4Entry> k4_table_from_json(const nlohmann::json& j);

// Table verdict for a complete rotation system on exactly four vertices.
// The crossing, when present, is reported as two pairs of vertex indices
// of rs.
struct K4Verdict {
    bool realizable = false;
    std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> crossing;
};
K4Verdict k4_verdict(const RotationSystem& rs);

// Exact realizability for a complete-graph rotation system on at least
// three vertices. Every 4-vertex subsystem is checked against the table
// first; a full route search settles the survivors.
bool is_realizable_ks(const RotationSystem& rs, const RealizeOptions& opt = {});

} // namespace mpcross

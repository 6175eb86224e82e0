#include "mpcross/witness.hpp"

#include "mpcross/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mpcross {

namespace {

// Flat dart ids: (node, slot) pairs in rotation order, with a twin table
// built by matching reverse entries edge by edge.
struct DartTable {
    std::vector<std::pair<int, int>> darts; // (node, slot)
    std::vector<int> twin;
    std::vector<int> id; // id[node offset + slot]
    std::vector<size_t> offset;
    bool ok = true;
    std::string problem;

    int at(int node, int slot) const { return id[offset[size_t(node)] + size_t(slot)]; }
};

DartTable build_darts(const PlanarizedWitness& w) {
    DartTable t;
    t.offset.resize(w.nodes.size(), 0);
    size_t total = 0;
    for (size_t n = 0; n < w.nodes.size(); ++n) {
        t.offset[n] = total;
        total += w.rotations[n].size();
    }
    t.id.resize(total);
    for (size_t n = 0; n < w.nodes.size(); ++n)
        for (size_t s = 0; s < w.rotations[n].size(); ++s) {
            t.id[t.offset[n] + s] = int(t.darts.size());
            t.darts.push_back({int(n), int(s)});
        }
    t.twin.assign(t.darts.size(), -1);
    for (size_t d = 0; d < t.darts.size(); ++d) {
        if (t.twin[d] >= 0) continue;
        auto [n, s] = t.darts[d];
        const auto& entry = w.rotations[size_t(n)][size_t(s)];
        int target = entry.to;
        if (target < 0 || target >= int(w.nodes.size())) {
            t.ok = false;
            t.problem = "dart target out of range";
            return t;
        }
        int found = -1;
        for (size_t s2 = 0; s2 < w.rotations[size_t(target)].size(); ++s2) {
            const auto& back = w.rotations[size_t(target)][s2];
            if (back.to == n && back.edge == entry.edge) {
                int cand = t.at(target, int(s2));
                if (t.twin[size_t(cand)] < 0 && cand != int(d)) {
                    found = cand;
                    break;
                }
            }
        }
        if (found < 0) {
            t.ok = false;
            t.problem = "unmatched dart at node " + std::to_string(n);
            return t;
        }
        t.twin[d] = found;
        t.twin[size_t(found)] = int(d);
    }
    return t;
}

} // namespace

std::vector<std::string> check_witness(const PlanarizedWitness& w) {
    std::vector<std::string> out;
    const RotationSystem& rs = w.system;
    auto rs_problems = validate_rs(rs);
    out.insert(out.end(), rs_problems.begin(), rs_problems.end());

    if (w.rotations.size() != w.nodes.size()) {
        out.push_back("rotation table does not match nodes");
        return out;
    }

    // Real nodes carry vertices one to one; crossing nodes name edge pairs.
    std::vector<int> node_of_vertex(size_t(rs.vertex_count()), -1);
    std::set<std::pair<int, int>> crossed_pairs;
    for (size_t n = 0; n < w.nodes.size(); ++n) {
        const auto& node = w.nodes[n];
        if (!node.crossing) {
            if (node.vid < 0 || node.vid >= rs.vertex_count()) {
                out.push_back("real node with bad vertex id");
                continue;
            }
            if (node_of_vertex[size_t(node.vid)] >= 0)
                out.push_back("vertex appears at two nodes");
            node_of_vertex[size_t(node.vid)] = int(n);
        } else {
            if (node.e1 < 0 || node.e2 < 0 || node.e1 >= rs.edge_count() ||
                node.e2 >= rs.edge_count() || node.e1 >= node.e2) {
                out.push_back("crossing node with bad edge pair");
                continue;
            }
            auto [a1, b1] = rs.edges[size_t(node.e1)];
            auto [a2, b2] = rs.edges[size_t(node.e2)];
            if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
                out.push_back("crossing between adjacent edges");
            if (!crossed_pairs.insert({node.e1, node.e2}).second)
                out.push_back("edge pair crosses twice");
            if (w.rotations[n].size() != 4) {
                out.push_back("crossing node degree is not 4");
                continue;
            }
            // Same-edge darts sit opposite, so the two curves cross
            // transversally.
            const auto& r = w.rotations[n];
            if (r[0].edge != r[2].edge || r[1].edge != r[3].edge ||
                r[0].edge == r[1].edge ||
                std::min(r[0].edge, r[1].edge) != node.e1 ||
                std::max(r[0].edge, r[1].edge) != node.e2)
                out.push_back("crossing node rotation does not alternate its edges");
        }
    }
    for (int v = 0; v < rs.vertex_count(); ++v)
        if (node_of_vertex[size_t(v)] < 0) out.push_back("vertex without a node");
    if (!out.empty()) return out;

    DartTable t = build_darts(w);
    if (!t.ok) {
        out.push_back(t.problem);
        return out;
    }

    // Genus check: connected and V - E + F = 2.
    size_t dart_count = t.darts.size();
    if (dart_count % 2) {
        out.push_back("odd dart count");
        return out;
    }
    size_t E = dart_count / 2;
    std::vector<int> face(dart_count, -1);
    int faces = 0;
    for (size_t d = 0; d < dart_count; ++d) {
        if (face[d] >= 0) continue;
        size_t cur = d;
        do {
            face[cur] = faces;
            int tw = t.twin[cur];
            auto [n, s] = t.darts[size_t(tw)];
            int deg = int(w.rotations[size_t(n)].size());
            cur = size_t(t.at(n, (s + 1) % deg));
        } while (cur != d);
        ++faces;
    }
    std::vector<int> comp(w.nodes.size(), -1);
    std::vector<size_t> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        size_t n = stack.back();
        stack.pop_back();
        for (const auto& entry : w.rotations[n])
            if (comp[size_t(entry.to)] < 0) {
                comp[size_t(entry.to)] = 0;
                stack.push_back(size_t(entry.to));
            }
    }
    for (int c : comp)
        if (c < 0) {
            out.push_back("map is not connected");
            return out;
        }
    long euler = long(w.nodes.size()) - long(E) + long(faces);
    if (euler != 2) {
        out.push_back("Euler characteristic is " + std::to_string(euler));
        return out;
    }

    // Real rotations restrict to the prescribed system.
    for (int v = 0; v < rs.vertex_count(); ++v) {
        size_t n = size_t(node_of_vertex[size_t(v)]);
        std::vector<int> seen_nbrs;
        for (const auto& entry : w.rotations[n]) {
            auto [a, b] = rs.edges[size_t(entry.edge)];
            if (a != v && b != v) {
                out.push_back("foreign edge at vertex " + rs.labels[size_t(v)]);
                continue;
            }
            seen_nbrs.push_back(a == v ? b : a);
        }
        const auto& want = rs.rot[size_t(v)];
        bool match = seen_nbrs.size() == want.size();
        if (match && !want.empty()) {
            auto it = std::find(seen_nbrs.begin(), seen_nbrs.end(), want[0]);
            match = it != seen_nbrs.end();
            if (match) {
                size_t start = size_t(it - seen_nbrs.begin());
                for (size_t k = 0; k < want.size(); ++k)
                    if (seen_nbrs[(start + k) % want.size()] != want[k]) match = false;
            }
        }
        if (!match)
            out.push_back("rotation at vertex " + rs.labels[size_t(v)] +
                          " differs from the prescribed system");
    }

    // Segment map traces each edge through its crossing nodes.
    if (w.segment_map.size() != size_t(rs.edge_count())) {
        out.push_back("segment map does not cover the edges");
        return out;
    }
    for (int e = 0; e < rs.edge_count(); ++e) {
        const auto& path = w.segment_map[size_t(e)];
        auto [a, b] = rs.edges[size_t(e)];
        if (path.size() < 2 || path.front() != node_of_vertex[size_t(a)] ||
            path.back() != node_of_vertex[size_t(b)]) {
            out.push_back("segment path endpoints wrong for edge " + std::to_string(e));
            continue;
        }
        std::set<int> interior;
        for (size_t k = 1; k + 1 < path.size(); ++k) {
            int n = path[k];
            const auto& node = w.nodes[size_t(n)];
            if (!node.crossing || (node.e1 != e && node.e2 != e))
                out.push_back("segment path passes a foreign node");
            if (!interior.insert(n).second)
                out.push_back("segment path repeats a node");
        }
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            bool linked = false;
            for (const auto& entry : w.rotations[size_t(path[k])])
                if (entry.edge == e && entry.to == path[k + 1]) linked = true;
            if (!linked) {
                out.push_back("segment path break on edge " + std::to_string(e));
                break;
            }
        }
        size_t expected = 0;
        for (const auto& node : w.nodes)
            if (node.crossing && (node.e1 == e || node.e2 == e)) ++expected;
        if (path.size() != expected + 2)
            out.push_back("segment path misses a crossing of edge " + std::to_string(e));
    }
    return out;
}

AbstractDrawing crossings_of_witness(const PlanarizedWitness& w) {
    const RotationSystem& rs = w.system;
    std::vector<Vertex> parsed;
    for (const auto& l : rs.labels) parsed.push_back(parse_vertex(l));

    AbstractDrawing d;
    std::map<int, std::vector<Vertex>> by_class;
    for (Vertex v : parsed) by_class[v.cls].push_back(v);
    for (auto& [cls, vs] : by_class) {
        std::sort(vs.begin(), vs.end());
        d.classes.emplace_back(std::move(vs));
    }
    for (auto [a, b] : rs.edges)
        d.edges.push_back(make_edge(parsed[size_t(a)], parsed[size_t(b)]));

    for (int v = 0; v < rs.vertex_count(); ++v) {
        std::vector<Vertex> nbrs;
        for (int u : rs.rot[size_t(v)]) nbrs.push_back(parsed[size_t(u)]);
        d.vertex_rotations.emplace(parsed[size_t(v)], CyclicOrder(std::move(nbrs)));
    }

    // Walk a dart to the real endpoint it leads to: follow the segment and
    // pass straight through crossing nodes (two slots further around).
    auto endpoint_of = [&](int node, int slot) {
        int cur = node, s = slot;
        for (;;) {
            const auto& entry = w.rotations[size_t(cur)][size_t(s)];
            int nxt = entry.to;
            if (!w.nodes[size_t(nxt)].crossing) return w.nodes[size_t(nxt)].vid;
            int back = -1;
            for (int k = 0; k < 4; ++k)
                if (w.rotations[size_t(nxt)][size_t(k)].edge == entry.edge &&
                    w.rotations[size_t(nxt)][size_t(k)].to == cur)
                    back = k;
            cur = nxt;
            s = (back + 2) % 4;
        }
    };

    for (size_t n = 0; n < w.nodes.size(); ++n) {
        const auto& node = w.nodes[n];
        if (!node.crossing) continue;
        std::vector<Vertex> around;
        for (int s = 0; s < 4; ++s) {
            // The rotation lists where each end leaves towards; record the
            // vertex each dart reaches. The dart itself leaves through the
            // opposite slot's continuation, so walk outward from here.
            int vid = endpoint_of(int(n), s);
            around.push_back(parsed[size_t(vid)]);
        }
        auto [a1, b1] = rs.edges[size_t(node.e1)];
        auto [a2, b2] = rs.edges[size_t(node.e2)];
        d.crossings.push_back(make_crossing(
            make_edge(parsed[size_t(a1)], parsed[size_t(b1)]),
            make_edge(parsed[size_t(a2)], parsed[size_t(b2)]), CyclicOrder(around)));
    }
    d.normalize();
    return d;
}

nlohmann::ordered_json witness_to_json(const PlanarizedWitness& w) {
    nlohmann::ordered_json j;
    j["system"] = rs_to_json(w.system);
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& node : w.nodes) {
        nlohmann::ordered_json n;
        if (node.crossing) {
            n["kind"] = "crossing";
            auto [a1, b1] = w.system.edges[size_t(node.e1)];
            auto [a2, b2] = w.system.edges[size_t(node.e2)];
            n["e"] = {w.system.labels[size_t(a1)], w.system.labels[size_t(b1)]};
            n["f"] = {w.system.labels[size_t(a2)], w.system.labels[size_t(b2)]};
        } else {
            n["kind"] = "vertex";
            n["label"] = w.system.labels[size_t(node.vid)];
        }
        j["nodes"].push_back(std::move(n));
    }
    j["rotations"] = nlohmann::ordered_json::array();
    for (const auto& rot : w.rotations) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& entry : rot) {
            auto [a, b] = w.system.edges[size_t(entry.edge)];
            nlohmann::ordered_json e;
            e["edge"] = {w.system.labels[size_t(a)], w.system.labels[size_t(b)]};
            e["to"] = entry.to;
            arr.push_back(std::move(e));
        }
        j["rotations"].push_back(std::move(arr));
    }
    j["segments"] = nlohmann::ordered_json::array();
    for (size_t e = 0; e < w.segment_map.size(); ++e) {
        auto [a, b] = w.system.edges[e];
        nlohmann::ordered_json s;
        s["edge"] = {w.system.labels[size_t(a)], w.system.labels[size_t(b)]};
        s["path"] = w.segment_map[e];
        j["segments"].push_back(std::move(s));
    }
    return j;
}

PlanarizedWitness witness_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("system"))
        throw ParseError("witness: missing system");
    PlanarizedWitness w;
    w.system = rs_from_json(j["system"]);
    auto edge_of = [&](const nlohmann::json& arr) {
        int a = w.system.index_of(arr.at(0).get<std::string>());
        int b = w.system.index_of(arr.at(1).get<std::string>());
        int e = a < 0 || b < 0 ? -1 : w.system.edge_id(a, b);
        if (e < 0) throw ParseError("witness: unknown edge");
        return e;
    };
    for (const auto& n : j.at("nodes")) {
        PlanarizedWitness::WNode node;
        if (n.at("kind") == "crossing") {
            node.crossing = true;
            int e1 = edge_of(n.at("e"));
            int e2 = edge_of(n.at("f"));
            node.e1 = std::min(e1, e2);
            node.e2 = std::max(e1, e2);
        } else {
            node.vid = w.system.index_of(n.at("label").get<std::string>());
            if (node.vid < 0) throw ParseError("witness: unknown vertex label");
        }
        w.nodes.push_back(node);
    }
    for (const auto& rot : j.at("rotations")) {
        std::vector<PlanarizedWitness::WDart> entries;
        for (const auto& e : rot)
            entries.push_back({edge_of(e.at("edge")), e.at("to").get<int>()});
        w.rotations.push_back(std::move(entries));
    }
    w.segment_map.resize(size_t(w.system.edge_count()));
    for (const auto& s : j.at("segments")) {
        int e = edge_of(s.at("edge"));
        w.segment_map[size_t(e)] = s.at("path").get<std::vector<int>>();
    }
    return w;
}

} // namespace mpcross

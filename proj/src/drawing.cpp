#include "mpcross/drawing.hpp"

#include "mpcross/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace mpcross {

Edge make_edge(Vertex u, Vertex v) {
    if (u == v) throw Error("edge endpoints must differ: " + to_string(u));
    if (v < u) std::swap(u, v);
    return Edge{u, v};
}

std::string to_string(const Edge& e) {
    return to_string(e.a) + "-" + to_string(e.b);
}

CrossingRecord make_crossing(const Edge& e, const Edge& f, CyclicOrder rotation) {
    CrossingRecord r{e, f, std::move(rotation)};
    if (r.f < r.e) std::swap(r.e, r.f);
    return r;
}

std::vector<Vertex> AbstractDrawing::vertices() const {
    std::vector<Vertex> out;
    for (const auto& cls : classes)
        out.insert(out.end(), cls.begin(), cls.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool AbstractDrawing::has_vertex(Vertex v) const {
    for (const auto& cls : classes)
        if (cls.contains(v)) return true;
    return false;
}

int AbstractDrawing::class_of(Vertex v) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].contains(v)) return int(i) + 1;
    return 0;
}

bool AbstractDrawing::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

const CrossingRecord* AbstractDrawing::crossing_between(const Edge& e, const Edge& f) const {
    Edge lo = e, hi = f;
    if (hi < lo) std::swap(lo, hi);
    auto it = std::lower_bound(crossings.begin(), crossings.end(), std::make_pair(lo, hi),
                               [](const CrossingRecord& r, const std::pair<Edge, Edge>& key) {
                                   return std::tie(r.e, r.f) < std::tie(key.first, key.second);
                               });
    if (it != crossings.end() && it->e == lo && it->f == hi) return &*it;
    return nullptr;
}

void AbstractDrawing::normalize() {
    std::sort(edges.begin(), edges.end());
    std::sort(crossings.begin(), crossings.end(),
              [](const CrossingRecord& x, const CrossingRecord& y) {
                  return std::tie(x.e, x.f) < std::tie(y.e, y.f);
              });
}

AbstractDrawing induce_edges(const AbstractDrawing& d, const std::vector<Edge>& edge_subset) {
    std::set<Edge> keep;
    for (const Edge& e : edge_subset) {
        if (!d.has_edge(e)) throw UnknownEdgeError("induce_edges: unknown edge " + to_string(e));
        keep.insert(e);
    }
    AbstractDrawing out;
    out.classes = d.classes;
    out.edges.assign(keep.begin(), keep.end());
    for (const auto& [v, rot] : d.vertex_rotations) {
        Vertex at = v;
        out.vertex_rotations.emplace(
            v, rot.restricted([&](Vertex u) { return keep.count(make_edge(at, u)) > 0; }));
    }
    for (const CrossingRecord& r : d.crossings)
        if (keep.count(r.e) && keep.count(r.f)) out.crossings.push_back(r);
    out.normalize();
    return out;
}

AbstractDrawing induce_vertices(const AbstractDrawing& d, const std::vector<Vertex>& vertex_subset) {
    std::unordered_set<Vertex> keep;
    for (Vertex v : vertex_subset) {
        if (!d.has_vertex(v))
            throw UnknownVertexError("induce_vertices: unknown vertex " + to_string(v));
        keep.insert(v);
    }
    AbstractDrawing out;
    for (const auto& cls : d.classes) {
        std::vector<Vertex> kept;
        for (Vertex v : cls)
            if (keep.count(v)) kept.push_back(v);
        if (!kept.empty()) out.classes.emplace_back(std::move(kept));
    }
    for (const Edge& e : d.edges)
        if (keep.count(e.a) && keep.count(e.b)) out.edges.push_back(e);
    for (const auto& [v, rot] : d.vertex_rotations)
        if (keep.count(v))
            out.vertex_rotations.emplace(
                v, rot.restricted([&](Vertex u) { return keep.count(u) > 0; }));
    for (const CrossingRecord& r : d.crossings)
        if (keep.count(r.e.a) && keep.count(r.e.b) && keep.count(r.f.a) && keep.count(r.f.b))
            out.crossings.push_back(r);
    out.normalize();
    return out;
}

CyclicOrder rotation_at_vertex(const AbstractDrawing& d, Vertex v,
                               const std::vector<Vertex>& subset) {
    auto it = d.vertex_rotations.find(v);
    if (it == d.vertex_rotations.end())
        throw UnknownVertexError("rotation_at_vertex: no rotation at " + to_string(v));
    std::unordered_set<Vertex> keep;
    for (Vertex u : subset) {
        if (u == v || !it->second.contains(u))
            throw NotAdjacentError("rotation_at_vertex: " + to_string(u) +
                                   " is not a neighbour of " + to_string(v));
        keep.insert(u);
    }
    return it->second.restricted([&](Vertex u) { return keep.count(u) > 0; });
}

bool weak_iso(const AbstractDrawing& d1, const AbstractDrawing& d2,
              const std::map<Vertex, Vertex>& phi) {
    auto v1 = d1.vertices();
    auto v2 = d2.vertices();
    std::set<Vertex> image;
    for (Vertex v : v1) {
        auto it = phi.find(v);
        if (it == phi.end())
            throw NotABijectionError("weak_iso: " + to_string(v) + " has no image");
        if (!image.insert(it->second).second)
            throw NotABijectionError("weak_iso: two vertices map to " + to_string(it->second));
    }
    if (std::set<Vertex>(v2.begin(), v2.end()) != image || phi.size() != v1.size())
        throw NotABijectionError("weak_iso: phi is not onto the second vertex set");

    auto map_edge = [&](const Edge& e) { return make_edge(phi.at(e.a), phi.at(e.b)); };
    if (d1.edges.size() != d2.edges.size()) return false;
    for (const Edge& e : d1.edges)
        if (!d2.has_edge(map_edge(e))) return false;
    if (d1.crossings.size() != d2.crossings.size()) return false;
    for (const CrossingRecord& r : d1.crossings)
        if (!d2.crossing_between(map_edge(r.e), map_edge(r.f))) return false;
    return true;
}

std::vector<Violation> validate(const AbstractDrawing& d) {
    std::vector<Violation> out;
    std::unordered_map<Vertex, int> cls_of;
    for (size_t i = 0; i < d.classes.size(); ++i) {
        for (Vertex v : d.classes[i]) {
            auto [it, fresh] = cls_of.emplace(v, int(i) + 1);
            if (!fresh)
                out.push_back({"class-overlap", to_string(v) + " occurs in classes " +
                                                     std::to_string(it->second) + " and " +
                                                     std::to_string(i + 1)});
        }
    }

    std::set<Edge> edge_set;
    std::unordered_map<Vertex, std::set<Vertex>> nbrs;
    for (const Edge& e : d.edges) {
        if (!cls_of.count(e.a) || !cls_of.count(e.b)) {
            out.push_back({"unknown-endpoint", to_string(e)});
            continue;
        }
        if (cls_of[e.a] == cls_of[e.b])
            out.push_back({"same-class-edge", to_string(e)});
        if (!edge_set.insert(e).second)
            out.push_back({"duplicate-edge", to_string(e)});
        nbrs[e.a].insert(e.b);
        nbrs[e.b].insert(e.a);
    }

    for (const auto& [v, rot] : d.vertex_rotations) {
        if (!cls_of.count(v)) {
            out.push_back({"rotation-domain", "rotation at unknown vertex " + to_string(v)});
            continue;
        }
        std::set<Vertex> listed(rot.begin(), rot.end());
        if (listed.size() != rot.size() || listed != nbrs[v])
            out.push_back({"rotation-content",
                           "rotation at " + to_string(v) + " does not list its neighbours"});
    }
    for (const auto& [v, ns] : nbrs)
        if (!ns.empty() && !d.vertex_rotations.count(v))
            out.push_back({"rotation-domain", "no rotation at " + to_string(v)});

    std::set<std::pair<Edge, Edge>> seen_pairs;
    for (const CrossingRecord& r : d.crossings) {
        if (!edge_set.count(r.e) || !edge_set.count(r.f)) {
            out.push_back({"unknown-edge-crossing", to_string(r.e) + " x " + to_string(r.f)});
            continue;
        }
        if (r.e.shares_endpoint(r.f)) {
            out.push_back({"adjacent-crossing", to_string(r.e) + " x " + to_string(r.f)});
            continue;
        }
        Edge lo = r.e, hi = r.f;
        if (hi < lo) std::swap(lo, hi);
        if (!seen_pairs.insert({lo, hi}).second)
            out.push_back({"duplicate-crossing", to_string(r.e) + " x " + to_string(r.f)});
        std::set<Vertex> ends{r.e.a, r.e.b, r.f.a, r.f.b};
        std::set<Vertex> listed(r.rotation.begin(), r.rotation.end());
        if (r.rotation.size() != 4 || listed != ends) {
            out.push_back({"malformed-rotation", to_string(r.e) + " x " + to_string(r.f)});
            continue;
        }
        // Ends of e and f must alternate around the crossing.
        const auto& seq = r.rotation.items();
        bool alternating = true;
        for (int k = 0; k < 4; ++k) {
            bool in_e = r.e.touches(seq[k]);
            bool next_in_e = r.e.touches(seq[(k + 1) % 4]);
            if (in_e == next_in_e) alternating = false;
        }
        if (!alternating)
            out.push_back({"non-alternating-rotation", to_string(r.e) + " x " + to_string(r.f)});
    }
    return out;
}

} // namespace mpcross

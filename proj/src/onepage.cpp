#include "mpcross/onepage.hpp"

#include "mpcross/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mpcross {

AbstractDrawing from_onepage(const OnePageDrawing& p) {
    const CyclicOrder& rho = p.bounding_order;
    for (const Edge& e : p.edges) {
        if (!rho.contains(e.a) || !rho.contains(e.b))
            throw MissingVertexError("from_onepage: edge " + to_string(e) +
                                     " leaves the bounding order");
    }

    AbstractDrawing d;
    std::map<int, std::vector<Vertex>> by_class;
    for (Vertex v : rho) by_class[v.cls].push_back(v);
    for (auto& [cls, vs] : by_class) {
        std::sort(vs.begin(), vs.end());
        d.classes.emplace_back(std::move(vs));
    }

    std::set<Edge> edge_set(p.edges.begin(), p.edges.end());
    d.edges.assign(edge_set.begin(), edge_set.end());

    std::map<Vertex, std::set<Vertex>> nbrs;
    for (const Edge& e : d.edges) {
        nbrs[e.a].insert(e.b);
        nbrs[e.b].insert(e.a);
    }
    for (Vertex v : rho) {
        const auto& ns = nbrs[v];
        d.vertex_rotations.emplace(v, rho.restricted([&](Vertex u) { return ns.count(u) > 0; }));
    }

    for (size_t i = 0; i < d.edges.size(); ++i) {
        for (size_t j = i + 1; j < d.edges.size(); ++j) {
            const Edge& e = d.edges[i];
            const Edge& f = d.edges[j];
            if (e.shares_endpoint(f)) continue;
            if (!interleaves(rho, {e.a, e.b}, {f.a, f.b})) continue;
            std::set<Vertex> ends{e.a, e.b, f.a, f.b};
            CyclicOrder rot = rho.restricted([&](Vertex u) { return ends.count(u) > 0; });
            d.crossings.push_back(make_crossing(e, f, std::move(rot)));
        }
    }
    d.normalize();
    return d;
}

bool is_rho_drawing(const AbstractDrawing& d, const CyclicOrder& rho,
                    const std::vector<Edge>& edge_set) {
    AbstractDrawing ref = from_onepage(OnePageDrawing{rho, edge_set});
    AbstractDrawing sub = induce_edges(d, edge_set);
    return sub.crossings == ref.crossings;
}

bool is_natural_pair(const AbstractDrawing& d, const Permutation& A, const Permutation& B) {
    for (size_t p = 0; p < A.size(); ++p) {
        for (size_t p2 = p + 1; p2 < A.size(); ++p2) {
            for (size_t q = 0; q < B.size(); ++q) {
                for (size_t q2 = q + 1; q2 < B.size(); ++q2) {
                    Vertex a = A[p], a2 = A[p2], b = B[q], b2 = B[q2];
                    const CrossingRecord* r =
                        d.crossing_between(make_edge(a, b), make_edge(a2, b2));
                    if (!r) return false;
                    if (r->rotation != CyclicOrder({a, a2, b, b2})) return false;
                }
            }
        }
    }
    return true;
}

CyclicOrder signed_cycle(const std::vector<std::pair<int, Permutation>>& parts) {
    return cyclic(concat(parts));
}

} // namespace mpcross

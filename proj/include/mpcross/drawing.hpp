#pragma once

#include "mpcross/cyclic_order.hpp"
#include "mpcross/permutation.hpp"
#include "mpcross/vertex.hpp"

#include <map>
#include <string>
#include <vector>

namespace mpcross {

// An unordered pair of distinct vertices, stored with a < b.
struct Edge {
    Vertex a, b;
    auto operator<=>(const Edge&) const = default;

    bool touches(Vertex v) const { return a == v || b == v; }
    Vertex other(Vertex v) const { return a == v ? b : a; }
    bool shares_endpoint(const Edge& o) const {
        return touches(o.a) || touches(o.b);
    }
};

Edge make_edge(Vertex u, Vertex v);
std::string to_string(const Edge& e);

// One crossing between two independent edges. The rotation is the clockwise
// cyclic order in which the four ends leave the crossing point, recorded by
// their endpoint vertices; ends of e and f alternate.
struct CrossingRecord {
    Edge e, f; // e < f
    CyclicOrder rotation;

    auto operator<=>(const CrossingRecord&) const = default;
};

CrossingRecord make_crossing(const Edge& e, const Edge& f, CyclicOrder rotation);

// A drawing reduced to its combinatorial data: partite classes in class
// order, the edge set, the clockwise rotation of neighbours at every
// vertex, and one record per crossing edge pair.
struct AbstractDrawing {
    std::vector<Permutation> classes;
    std::vector<Edge> edges;                       // sorted
    std::map<Vertex, CyclicOrder> vertex_rotations; // neighbours, clockwise
    std::vector<CrossingRecord> crossings;         // sorted by (e, f)

    std::vector<Vertex> vertices() const;
    bool has_vertex(Vertex v) const;
    // 1-based class index, 0 when the vertex is in no class.
    int class_of(Vertex v) const;
    bool has_edge(const Edge& e) const;
    const CrossingRecord* crossing_between(const Edge& e, const Edge& f) const;

    // Sorts edges and crossings; producers call this once at the end.
    void normalize();
};

struct Violation {
    std::string kind;
    std::string detail;
};

// Sub-drawing on an edge subset. Vertices and classes stay; rotations are
// restricted to the kept edges. Throws UnknownEdgeError.
AbstractDrawing induce_edges(const AbstractDrawing& d, const std::vector<Edge>& edge_subset);

// Sub-drawing on a vertex subset. Classes are restricted and empty classes
// dropped. Throws UnknownVertexError.
AbstractDrawing induce_vertices(const AbstractDrawing& d, const std::vector<Vertex>& vertex_subset);

// Rotation at v restricted to its neighbours in subset, reported as a cyclic
// order of the subset members. Every subset member must be adjacent to v.
CyclicOrder rotation_at_vertex(const AbstractDrawing& d, Vertex v,
                               const std::vector<Vertex>& subset);

// True when phi matches crossing edge pairs of d1 exactly onto those of d2.
// phi must be a bijection between the vertex sets (NotABijectionError).
bool weak_iso(const AbstractDrawing& d1, const AbstractDrawing& d2,
              const std::map<Vertex, Vertex>& phi);

// Local well-formedness report: empty means no violation found.
std::vector<Violation> validate(const AbstractDrawing& d);

} // namespace mpcross

#pragma once

#include <utility>
#include <vector>

namespace mpcross {

// Mutable combinatorial map used during edge insertion. Darts come in twin
// pairs (twin(d) == d ^ 1); dead darts keep their slots so ids stay stable
// across copies. Rotations are clockwise; the face walk next(twin(d))
// keeps the traced face on the left of each walked dart.
struct PMap {
    struct Node {
        bool crossing = false;
        int vid = -1;
        int e1 = -1, e2 = -1;
    };

    std::vector<Node> nodes;
    std::vector<int> real_node; // vid -> node id, -1 when unplaced
    std::vector<int> dart_node; // -1 for dead darts
    std::vector<int> dart_next;
    std::vector<int> dart_prev;
    std::vector<int> dart_edge;
    std::vector<int> node_dart; // some live dart, -1 for isolated nodes

    explicit PMap(int vertex_count) : real_node(size_t(vertex_count), -1) {}

    static int twin(int d) { return d ^ 1; }
    bool alive(int d) const { return dart_node[size_t(d)] >= 0; }
    int face_next(int d) const { return dart_next[size_t(twin(d))]; }

    int add_real_node(int vid) {
        nodes.push_back(Node{false, vid, -1, -1});
        node_dart.push_back(-1);
        real_node[size_t(vid)] = int(nodes.size()) - 1;
        return int(nodes.size()) - 1;
    }

    int add_crossing_node(int e1, int e2) {
        if (e2 < e1) std::swap(e1, e2);
        nodes.push_back(Node{true, -1, e1, e2});
        node_dart.push_back(-1);
        return int(nodes.size()) - 1;
    }

    // Inserts dart d into the rotation of node n, clockwise after `after`
    // (-1 when n has no darts yet).
    void splice_in(int n, int d, int after) {
        dart_node[size_t(d)] = n;
        if (after < 0) {
            dart_next[size_t(d)] = d;
            dart_prev[size_t(d)] = d;
            node_dart[size_t(n)] = d;
        } else {
            int nxt = dart_next[size_t(after)];
            dart_next[size_t(after)] = d;
            dart_prev[size_t(d)] = after;
            dart_next[size_t(d)] = nxt;
            dart_prev[size_t(nxt)] = d;
        }
    }

    void splice_out(int d) {
        int n = dart_node[size_t(d)];
        int nxt = dart_next[size_t(d)];
        if (nxt == d) {
            node_dart[size_t(n)] = -1;
        } else {
            int prv = dart_prev[size_t(d)];
            dart_next[size_t(prv)] = nxt;
            dart_prev[size_t(nxt)] = prv;
            if (node_dart[size_t(n)] == d) node_dart[size_t(n)] = nxt;
        }
        dart_node[size_t(d)] = -1;
    }

    // Twin pair a->b, b->a for edge eid; returns the dart at a.
    int add_segment(int a, int after_a, int b, int after_b, int eid) {
        int d = int(dart_node.size());
        dart_node.insert(dart_node.end(), {-2, -2});
        dart_next.insert(dart_next.end(), {-1, -1});
        dart_prev.insert(dart_prev.end(), {-1, -1});
        dart_edge.insert(dart_edge.end(), {eid, eid});
        splice_in(a, d, after_a);
        splice_in(b, d + 1, after_b);
        return d;
    }

    void remove_segment(int d) {
        splice_out(d);
        splice_out(twin(d));
    }

    std::vector<int> darts_at(int n) const {
        std::vector<int> out;
        int start = node_dart[size_t(n)];
        if (start < 0) return out;
        int d = start;
        do {
            out.push_back(d);
            d = dart_next[size_t(d)];
        } while (d != start);
        return out;
    }

    // The walked darts of the face containing the corner clockwise after
    // dart p, starting with the dart that leaves the corner.
    std::vector<int> face_from_corner(int p) const {
        std::vector<int> out;
        int start = dart_next[size_t(p)];
        int d = start;
        do {
            out.push_back(d);
            d = face_next(d);
        } while (d != start);
        return out;
    }
};

} // namespace mpcross

#include "mpcross/realize.hpp"

#include "mpcross/errors.hpp"
#include "planar_map.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>

namespace mpcross {

namespace {

// Edge order: sorted by (min, max) endpoint, then refined so every edge
// after the first touches an already placed vertex. For complete graphs and
// complete multipartite graphs the sorted order already has that property,
// so the refinement is the identity there.
std::vector<int> insertion_order(const RotationSystem& rs) {
    std::vector<int> ids(size_t(rs.edge_count()));
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = int(i);
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return rs.edges[size_t(a)] < rs.edges[size_t(b)]; });
    std::vector<int> order;
    std::vector<bool> used(ids.size(), false);
    std::vector<bool> placed(size_t(rs.vertex_count()), false);
    for (size_t step = 0; step < ids.size(); ++step) {
        int pick = -1;
        for (size_t k = 0; k < ids.size(); ++k) {
            if (used[k]) continue;
            auto [a, b] = rs.edges[size_t(ids[k])];
            if (step == 0 || placed[size_t(a)] || placed[size_t(b)]) {
                pick = int(k);
                break;
            }
        }
        if (pick < 0) throw Error("realize: the graph is not connected");
        used[size_t(pick)] = true;
        auto [a, b] = rs.edges[size_t(ids[size_t(pick)])];
        placed[size_t(a)] = placed[size_t(b)] = true;
        order.push_back(ids[size_t(pick)]);
    }
    return order;
}

class RealizeSearch {
public:
    RealizeSearch(const RotationSystem& rs, const RealizeOptions& opt)
        : rs_(rs), opt_(opt), rng_(opt.seed), order_(insertion_order(rs)) {
        adjacent_.resize(size_t(rs.edge_count()));
        for (int e = 0; e < rs.edge_count(); ++e)
            for (int g = 0; g < rs.edge_count(); ++g) {
                auto [a1, b1] = rs.edges[size_t(e)];
                auto [a2, b2] = rs.edges[size_t(g)];
                bool share = e == g || a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2;
                adjacent_[size_t(e)].push_back(share);
            }
    }

    // Runs the search; found maps are handed to the sink in discovery
    // order. Stops early when the sink returns false.
    void run(const std::function<bool(const PMap&)>& sink) {
        sink_ = &sink;
        stop_ = false;
        expansions_ = 0;
        PMap map(rs_.vertex_count());
        insert_edges(map, 0);
    }

    long long expansions() const { return expansions_; }

private:
    void charge() {
        if (++expansions_ > opt_.budget)
            throw BudgetExceededError("realize: route expansion budget exhausted");
    }

    // Dart at real node of vid belonging to edge eid, -1 when absent.
    int dart_for_edge(const PMap& map, int vid, int eid) const {
        int n = map.real_node[size_t(vid)];
        if (n < 0) return -1;
        for (int d : map.darts_at(n))
            if (map.dart_edge[size_t(d)] == eid) return d;
        return -1;
    }

    // Insertion corner for the segment of eid towards neighbour w at vertex
    // v: the dart of the closest predecessor of w in the prescribed
    // rotation among the edges already present at v.
    int gap_corner(const PMap& map, int v, int w) const {
        const auto& rot = rs_.rot[size_t(v)];
        size_t start = 0;
        while (rot[start] != w) ++start;
        for (size_t back = 1; back <= rot.size(); ++back) {
            int cand = rot[(start + rot.size() - back) % rot.size()];
            int eid = rs_.edge_id(v, cand);
            int d = eid < 0 ? -1 : dart_for_edge(map, v, eid);
            if (d >= 0) return d;
        }
        return -1;
    }

    void insert_edges(const PMap& map, size_t k) {
        if (stop_) return;
        if (k == order_.size()) {
            if (!(*sink_)(map)) stop_ = true;
            return;
        }
        int eid = order_[k];
        auto [a, b] = rs_.edges[size_t(eid)];
        bool pa = map.real_node[size_t(a)] >= 0;
        bool pb = map.real_node[size_t(b)] >= 0;
        if (!pa && !pb) {
            // First edge of the search: the two-node map is unique.
            charge();
            PMap next = map;
            int na = next.add_real_node(a);
            int nb = next.add_real_node(b);
            next.add_segment(na, -1, nb, -1, eid);
            insert_edges(next, k + 1);
            return;
        }
        int from = pa && pb ? (a < b ? a : b) : (pa ? a : b);
        int to = from == a ? b : a;
        int anchor = gap_corner(map, from, to);
        route(map, k, eid, anchor, to, 0);
    }

    // Extends the partial route of eid from the corner after `anchor`.
    // `crossed` is a bitmask of edge ids already crossed by this route.
    void route(const PMap& map, size_t k, int eid, int anchor, int target,
               std::uint64_t crossed) {
        if (stop_) return;
        std::vector<int> walk = map.face_from_corner(anchor);

        int target_corner = -1;
        if (map.real_node[size_t(target)] >= 0) {
            target_corner = gap_corner(map, target, rs_.edges[size_t(eid)].first == target
                                                        ? rs_.edges[size_t(eid)].second
                                                        : rs_.edges[size_t(eid)].first);
        }

        struct Option {
            bool finish;
            int walk_dart; // crossing options only
        };
        std::vector<Option> options;
        bool finish_ok = target_corner < 0;
        if (target_corner >= 0)
            for (int x : walk)
                if (PMap::twin(x) == target_corner) finish_ok = true;
        if (finish_ok) options.push_back({true, -1});
        for (int x : walk) {
            int g = map.dart_edge[size_t(x)];
            if (adjacent_[size_t(eid)][size_t(g)]) continue;
            if (crossed & (std::uint64_t(1) << g)) continue;
            options.push_back({false, x});
        }
        if (opt_.seed != 0)
            std::shuffle(options.begin(), options.end(), rng_);

        for (const Option& op : options) {
            if (stop_) return;
            charge();
            PMap next = map;
            if (op.finish) {
                int tn = next.real_node[size_t(target)];
                if (tn < 0) tn = next.add_real_node(target);
                next.add_segment(next.dart_node[size_t(anchor)], anchor, tn,
                                 target_corner, eid);
                insert_edges(next, k + 1);
            } else {
                int x = op.walk_dart;
                int g = next.dart_edge[size_t(x)];
                int pn = next.dart_node[size_t(x)];
                int qn = next.dart_node[size_t(PMap::twin(x))];
                int prev_p = next.dart_prev[size_t(x)];
                int prev_q = next.dart_prev[size_t(PMap::twin(x))];
                if (prev_p == x) prev_p = -1;
                if (prev_q == PMap::twin(x)) prev_q = -1;
                int xn = next.add_crossing_node(eid, g);
                next.remove_segment(x);
                int s_xq = next.add_segment(xn, -1, qn, prev_q, g);
                int s_xp = next.add_segment(xn, s_xq, pn, prev_p, g);
                next.add_segment(next.dart_node[size_t(anchor)], anchor, xn, s_xp, eid);
                route(next, k, eid, s_xq, target, crossed | (std::uint64_t(1) << g));
            }
        }
    }

    const RotationSystem& rs_;
    RealizeOptions opt_;
    std::mt19937_64 rng_;
    std::vector<int> order_;
    std::vector<std::vector<char>> adjacent_;
    const std::function<bool(const PMap&)>* sink_ = nullptr;
    bool stop_ = false;
    long long expansions_ = 0;
};

PlanarizedWitness witness_from_map(const RotationSystem& rs, const PMap& map) {
    PlanarizedWitness w;
    w.system = rs;
    for (size_t n = 0; n < map.nodes.size(); ++n) {
        const auto& node = map.nodes[n];
        w.nodes.push_back({node.crossing, node.vid, node.e1, node.e2});
        std::vector<PlanarizedWitness::WDart> rot;
        for (int d : map.darts_at(int(n)))
            rot.push_back({map.dart_edge[size_t(d)],
                           map.dart_node[size_t(PMap::twin(d))]});
        w.rotations.push_back(std::move(rot));
    }
    for (int e = 0; e < rs.edge_count(); ++e) {
        auto [a, b] = rs.edges[size_t(e)];
        std::vector<int> path{map.real_node[size_t(a)]};
        // Follow the segment chain, passing straight through crossings.
        int d = -1;
        for (int cand : map.darts_at(map.real_node[size_t(a)]))
            if (map.dart_edge[size_t(cand)] == e) d = cand;
        while (d >= 0) {
            int t = PMap::twin(d);
            int n = map.dart_node[size_t(t)];
            path.push_back(n);
            if (!map.nodes[size_t(n)].crossing) break;
            d = map.dart_next[size_t(map.dart_next[size_t(t)])];
        }
        w.segment_map.push_back(std::move(path));
    }
    return w;
}

} // namespace

RealizeOutcome realize(const RotationSystem& rs, const RealizeOptions& opt) {
    auto problems = validate_rs(rs);
    if (!problems.empty()) throw Error("realize: " + problems.front());
    if (rs.edge_count() == 0 || rs.edge_count() > 60)
        throw Error("realize: edge count out of supported range");

    RealizeSearch search(rs, opt);
    RealizeOutcome out;
    search.run([&](const PMap& map) {
        PlanarizedWitness w = witness_from_map(rs, map);
        auto check = check_witness(w);
        if (!check.empty())
            throw Error("realize: internal witness defect: " + check.front());
        out.realizable = true;
        out.witness = std::move(w);
        return false;
    });
    out.expansions = search.expansions();
    return out;
}

std::string completion_key(const AbstractDrawing& d) {
    std::string pairs, rots;
    std::vector<std::string> rot_strs;
    for (const CrossingRecord& r : d.crossings) {
        pairs += to_string(r.e) + "x" + to_string(r.f) + ";";
        std::string s;
        for (Vertex v : r.rotation.items()) s += to_string(v) + ",";
        rot_strs.push_back(std::move(s));
    }
    std::sort(rot_strs.begin(), rot_strs.end());
    for (const auto& s : rot_strs) rots += s + "|";
    return pairs + "#" + rots;
}

std::vector<AbstractDrawing> enumerate_completions(const RotationSystem& rs,
                                                   const RealizeOptions& opt) {
    auto problems = validate_rs(rs);
    if (!problems.empty()) throw Error("enumerate_completions: " + problems.front());
    if (rs.edge_count() == 0 || rs.edge_count() > 60)
        throw Error("enumerate_completions: edge count out of supported range");

    RealizeSearch search(rs, opt);
    std::map<std::string, AbstractDrawing> found;
    search.run([&](const PMap& map) {
        PlanarizedWitness w = witness_from_map(rs, map);
        auto check = check_witness(w);
        if (!check.empty())
            throw Error("enumerate_completions: internal witness defect: " + check.front());
        AbstractDrawing d = crossings_of_witness(w);
        found.emplace(completion_key(d), std::move(d));
        return true;
    });
    std::vector<AbstractDrawing> out;
    for (auto& [key, d] : found) out.push_back(std::move(d));
    return out;
}

} // namespace mpcross

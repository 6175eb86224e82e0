#include "support/expand_oracle.hpp"

#include "mpcross/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mpcross::testsupport {

namespace {

int list_pos(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : int(it - v.begin());
}

std::pair<int, int> ordered(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
}

} // namespace

std::vector<std::pair<Edge, Edge>> expansion_crossings(const Template& t, int n,
                                                       const PlanarizedWitness& w) {
    const int m = t.m;
    if (int(w.system.labels.size()) != m)
        throw Error("expansion oracle: witness has the wrong vertex count");

    // Where the witness edges cross, every strand of one ribbon crosses
    // every strand of the other.
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> ribbon_cross;
    for (const auto& node : w.nodes) {
        if (!node.crossing)
            continue;
        auto classes_of = [&](int eid) {
            auto [a, b] = w.system.edges[size_t(eid)];
            return ordered(std::stoi(w.system.labels[size_t(a)]),
                           std::stoi(w.system.labels[size_t(b)]));
        };
        auto p1 = classes_of(node.e1);
        auto p2 = classes_of(node.e2);
        if (p2 < p1)
            std::swap(p1, p2);
        ribbon_cross.insert({p1, p2});
    }

    auto sgn = [&](int of, int wrt) {
        return list_pos(t.classes[size_t(wrt - 1)].plus, of) >= 0 ? +1 : -1;
    };

    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int p = 1; p <= n; ++p)
                for (int q = 1; q <= n; ++q)
                    edges.push_back(make_edge(Vertex{i, p}, Vertex{j, q}));
    std::sort(edges.begin(), edges.end());

    std::vector<std::pair<Edge, Edge>> out;
    for (size_t x = 0; x < edges.size(); ++x) {
        for (size_t y = x + 1; y < edges.size(); ++y) {
            const Edge& e = edges[x];
            const Edge& f = edges[y];
            if (e.shares_endpoint(f))
                continue;
            auto ep = ordered(e.a.cls, e.b.cls);
            auto fp = ordered(f.a.cls, f.b.cls);
            bool cross = false;
            if (ep == fp) {
                // One ribbon. The bundle stays parallel inside it, so the
                // two strands cross exactly when the fans at the two ends
                // invert them an odd number of times; working through the
                // mouth orientations, that happens when the point orders
                // agree at both ends and the two attachment sides multiply
                // to plus, or disagree with product minus.
                int i = ep.first, j = ep.second;
                int p1 = (e.a.cls == i) ? e.a.idx : e.b.idx;
                int q1 = (e.a.cls == j) ? e.a.idx : e.b.idx;
                int p2 = (f.a.cls == i) ? f.a.idx : f.b.idx;
                int q2 = (f.a.cls == j) ? f.a.idx : f.b.idx;
                bool agree = (p1 < p2) == (q1 < q2);
                cross = agree == (sgn(j, i) * sgn(i, j) > 0);
            } else if (ep.first == fp.first || ep.first == fp.second ||
                       ep.second == fp.first || ep.second == fp.second) {
                // Two ribbons out of one box. They only meet inside that
                // box, where the straight fans from the points to the two
                // mouths cross exactly when source order inverts mouth
                // order; the mouth order follows the side's attachment
                // direction.
                int i = (ep.first == fp.first || ep.first == fp.second) ? ep.first
                                                                        : ep.second;
                int j = (ep.first == i) ? ep.second : ep.first;
                int l = (fp.first == i) ? fp.second : fp.first;
                int pj = (e.a.cls == i) ? e.a.idx : e.b.idx;
                int pl = (f.a.cls == i) ? f.a.idx : f.b.idx;
                int sj = sgn(j, i), sl = sgn(l, i);
                if (sj == sl) {
                    const auto& side = sj > 0 ? t.classes[size_t(i - 1)].plus
                                              : t.classes[size_t(i - 1)].minus;
                    bool j_first = list_pos(side, j) < list_pos(side, l);
                    if (sj > 0)
                        cross = j_first ? (pj < pl) : (pl < pj);
                    else
                        cross = j_first ? (pj > pl) : (pl > pj);
                }
            } else {
                auto key = ep < fp ? std::pair{ep, fp} : std::pair{fp, ep};
                cross = ribbon_cross.count(key) > 0;
            }
            if (cross)
                out.emplace_back(e, f);
        }
    }
    return out;
}

} // namespace mpcross::testsupport

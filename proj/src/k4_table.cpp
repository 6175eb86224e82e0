#include "mpcross/k4_table.hpp"

#include "mpcross/errors.hpp"

#include <algorithm>
#include <string>

namespace mpcross {

namespace {

RotationSystem k4_system(int index) {
    RotationSystem rs;
    rs.labels = {"1", "2", "3", "4"};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) rs.edges.push_back({a, b});
    for (int v = 0; v < 4; ++v) {
        std::vector<int> nb;
        for (int u = 0; u < 4; ++u)
            if (u != v) nb.push_back(u);
        if ((index >> v) & 1) std::swap(nb[1], nb[2]);
        rs.rot.push_back(std::move(nb));
    }
    return rs;
}

std::optional<std::pair<int, int>> crossing_of_completion(const RotationSystem& rs,
                                                          const AbstractDrawing& d) {
    if (d.crossings.empty()) return std::nullopt;
    if (d.crossings.size() != 1)
        throw Error("four-vertex completion with more than one crossing");
    const CrossingRecord& r = d.crossings.front();
    auto id = [&](const Edge& e) {
        int a = rs.index_of(to_string(e.a));
        int b = rs.index_of(to_string(e.b));
        return rs.edge_id(a, b);
    };
    int e = id(r.e), f = id(r.f);
    if (e < 0 || f < 0) throw Error("completion crossing names an unknown edge");
    if (e > f) std::swap(e, f);
    return std::make_pair(e, f);
}

std::vector<K4Entry> build_k4_table() {
    std::vector<K4Entry> table;
    for (int index = 0; index < 16; ++index) {
        K4Entry entry;
        entry.system = k4_system(index);
        auto completions = enumerate_completions(entry.system);
        entry.realizable = !completions.empty();
        bool first = true;
        for (const AbstractDrawing& d : completions) {
            auto cr = crossing_of_completion(entry.system, d);
            if (first) {
                entry.crossing_edges = cr;
                first = false;
            } else if (cr != entry.crossing_edges) {
                throw Error("four-vertex system with conflicting crossing verdicts");
            }
        }
        table.push_back(std::move(entry));
    }
    return table;
}

} // namespace

const std::vector<K4Entry>& k4_table() {
    static const std::vector<K4Entry> table = build_k4_table();
    return table;
}

nlohmann::ordered_json k4_table_to_json(const std::vector<K4Entry>& table) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    int realizable = 0;
    for (const K4Entry& e : table)
        if (e.realizable) ++realizable;
    j["realizable_count"] = realizable;
    j["entries"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < table.size(); ++i) {
        const K4Entry& e = table[i];
        nlohmann::ordered_json je;
        je["index"] = i;
        je["system"] = rs_to_json(e.system);
        je["realizable"] = e.realizable;
        if (e.crossing_edges) {
            auto edge_labels = [&](int id) {
                auto [a, b] = e.system.edges[size_t(id)];
                return nlohmann::ordered_json::array(
                    {e.system.labels[size_t(a)], e.system.labels[size_t(b)]});
            };
            je["crossing"] = nlohmann::ordered_json::array(
                {edge_labels(e.crossing_edges->first),
                 edge_labels(e.crossing_edges->second)});
        } else {
            je["crossing"] = nullptr;
        }
        j["entries"].push_back(std::move(je));
    }
    return j;
}

std::vector<K4Entry> k4_table_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("version") || !j.contains("entries"))
        throw ParseError("table file: expected version and entries");
    if (j["version"].get<int>() != 1)
        throw ParseError("table file: unsupported version");
    std::vector<K4Entry> table;
    for (const auto& je : j["entries"]) {
        K4Entry e;
        if (je["index"].get<int>() != int(table.size()))
            throw ParseError("table file: entries out of order");
        e.system = rs_from_json(je["system"]);
        e.realizable = je["realizable"].get<bool>();
        if (!je["crossing"].is_null()) {
            auto edge_of = [&](const nlohmann::json& arr) {
                int a = e.system.index_of(arr[0].get<std::string>());
                int b = e.system.index_of(arr[1].get<std::string>());
                int id = e.system.edge_id(a, b);
                if (id < 0) throw ParseError("table file: crossing names an unknown edge");
                return id;
            };
            e.crossing_edges =
                std::make_pair(edge_of(je["crossing"][0]), edge_of(je["crossing"][1]));
        }
        table.push_back(std::move(e));
    }
    if (table.size() != 16) throw ParseError("table file: expected 16 entries");
    int realizable = 0;
    for (const K4Entry& e : table)
        if (e.realizable) ++realizable;
    if (j.contains("realizable_count") && j["realizable_count"].get<int>() != realizable)
        throw ParseError("table file: realizable_count disagrees with entries");
    return table;
}

K4Verdict k4_verdict(const RotationSystem& rs) {
    if (rs.vertex_count() != 4 || !rs.is_complete())
        throw Error("table verdict requires a complete system on four vertices");
    auto problems = validate_rs(rs);
    if (!problems.empty()) throw Error("table verdict: " + problems.front());
    int index = 0;
    for (int v = 0; v < 4; ++v) {
        std::vector<int> sorted_nb;
        for (int u = 0; u < 4; ++u)
            if (u != v) sorted_nb.push_back(u);
        const auto& rot = rs.rot[size_t(v)];
        size_t at = 0;
        while (rot[at] != sorted_nb[0]) ++at;
        bool swapped = rot[(at + 1) % 3] == sorted_nb[2];
        if (swapped) index |= 1 << v;
    }
    const K4Entry& entry = k4_table()[size_t(index)];
    K4Verdict out;
    out.realizable = entry.realizable;
    if (entry.crossing_edges) {
        auto as_indices = [&](int id) { return entry.system.edges[size_t(id)]; };
        out.crossing = std::make_pair(as_indices(entry.crossing_edges->first),
                                      as_indices(entry.crossing_edges->second));
    }
    return out;
}

bool is_realizable_ks(const RotationSystem& rs, const RealizeOptions& opt) {
    auto problems = validate_rs(rs);
    if (!problems.empty()) throw Error("realizability check: " + problems.front());
    if (rs.vertex_count() < 3 || !rs.is_complete())
        throw Error("realizability check requires a complete system on at least "
                    "three vertices");
    int m = rs.vertex_count();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                for (int d = c + 1; d < m; ++d)
                    if (!k4_verdict(restrict_rs(rs, {a, b, c, d})).realizable)
                        return false;
    return realize(rs, opt).realizable;
}

} // namespace mpcross

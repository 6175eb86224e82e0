#include "mpcross/rotation_system.hpp"

#include "mpcross/drawing_json.hpp"
#include "mpcross/errors.hpp"

#include <algorithm>
#include <set>

namespace mpcross {

int RotationSystem::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return int(i);
    return -1;
}

int RotationSystem::edge_id(int a, int b) const {
    if (b < a) std::swap(a, b);
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i] == std::make_pair(a, b)) return int(i);
    return -1;
}

bool RotationSystem::is_complete() const {
    int n = vertex_count();
    return edge_count() == n * (n - 1) / 2;
}

void RotationSystem::sort_edges() {
    for (auto& [a, b] : edges)
        if (b < a) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
}

std::vector<std::string> validate_rs(const RotationSystem& rs) {
    std::vector<std::string> problems;
    std::set<std::string> seen;
    for (const auto& l : rs.labels)
        if (!seen.insert(l).second) problems.push_back("duplicate label " + l);

    int n = rs.vertex_count();
    std::vector<std::set<int>> nbrs(static_cast<size_t>(n));
    std::set<std::pair<int, int>> edge_set;
    for (auto [a, b] : rs.edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
            problems.push_back("edge endpoints out of range");
            continue;
        }
        if (!edge_set.insert(std::minmax(a, b)).second)
            problems.push_back("duplicate edge");
        nbrs[size_t(a)].insert(b);
        nbrs[size_t(b)].insert(a);
    }
    if (rs.rot.size() != size_t(n)) {
        problems.push_back("rotation table size mismatch");
        return problems;
    }
    for (int v = 0; v < n; ++v) {
        std::set<int> listed(rs.rot[size_t(v)].begin(), rs.rot[size_t(v)].end());
        if (listed.size() != rs.rot[size_t(v)].size() || listed != nbrs[size_t(v)])
            problems.push_back("rotation at " + rs.labels[size_t(v)] +
                               " does not list its neighbours");
    }
    return problems;
}

RotationSystem restrict_rs(const RotationSystem& rs, const std::vector<int>& keep) {
    std::vector<int> where(rs.labels.size(), -1);
    RotationSystem out;
    for (int v : keep) {
        where[size_t(v)] = int(out.labels.size());
        out.labels.push_back(rs.labels[size_t(v)]);
    }
    for (auto [a, b] : rs.edges)
        if (where[size_t(a)] >= 0 && where[size_t(b)] >= 0)
            out.edges.push_back(std::minmax(where[size_t(a)], where[size_t(b)]));
    out.sort_edges();
    for (int v : keep) {
        std::vector<int> r;
        for (int u : rs.rot[size_t(v)])
            if (where[size_t(u)] >= 0) r.push_back(where[size_t(u)]);
        out.rot.push_back(std::move(r));
    }
    return out;
}

nlohmann::ordered_json rs_to_json(const RotationSystem& rs) {
    nlohmann::ordered_json j;
    j["vertices"] = rs.labels;
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : rs.edges)
        j["edges"].push_back({rs.labels[size_t(a)], rs.labels[size_t(b)]});
    j["rotation"] = nlohmann::ordered_json::object();
    for (size_t v = 0; v < rs.labels.size(); ++v) {
        auto arr = nlohmann::ordered_json::array();
        for (int u : rs.rot[v]) arr.push_back(rs.labels[size_t(u)]);
        j["rotation"][rs.labels[v]] = std::move(arr);
    }
    return j;
}

RotationSystem rs_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j.contains("rotation"))
        throw ParseError("rotation system: expected vertices, edges and rotation");
    RotationSystem rs;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("rotation system: vertex labels are strings");
        rs.labels.push_back(v.get<std::string>());
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("rotation system: an edge has two endpoints");
        int a = rs.index_of(e[0].get<std::string>());
        int b = rs.index_of(e[1].get<std::string>());
        if (a < 0 || b < 0) throw ParseError("rotation system: edge endpoint not a vertex");
        rs.edges.push_back(std::minmax(a, b));
    }
    rs.sort_edges();
    rs.rot.resize(rs.labels.size());
    for (const auto& [key, val] : j["rotation"].items()) {
        int v = rs.index_of(key);
        if (v < 0) throw ParseError("rotation system: rotation key not a vertex");
        for (const auto& u : val) {
            int ui = rs.index_of(u.get<std::string>());
            if (ui < 0) throw ParseError("rotation system: rotation entry not a vertex");
            rs.rot[size_t(v)].push_back(ui);
        }
    }
    auto problems = validate_rs(rs);
    if (!problems.empty())
        throw ParseError("rotation system: " + problems.front());
    return rs;
}

RotationSystem load_rs(const std::string& path) {
    return rs_from_json(load_json(path));
}

} // namespace mpcross

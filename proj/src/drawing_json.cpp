#include "mpcross/drawing_json.hpp"

#include "mpcross/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mpcross {

namespace {

nlohmann::ordered_json vertex_list(const std::vector<Vertex>& vs) {
    auto arr = nlohmann::ordered_json::array();
    for (Vertex v : vs) arr.push_back(to_string(v));
    return arr;
}

std::vector<Vertex> parse_vertex_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<Vertex> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError(std::string(what) + ": expected a string entry");
        out.push_back(parse_vertex(item.get<std::string>()));
    }
    return out;
}

Edge parse_edge(const nlohmann::json& j, const char* what) {
    auto vs = parse_vertex_list(j, what);
    if (vs.size() != 2) throw ParseError(std::string(what) + ": an edge has two endpoints");
    return make_edge(vs[0], vs[1]);
}

} // namespace

nlohmann::ordered_json drawing_to_json(const AbstractDrawing& d) {
    nlohmann::ordered_json j;
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& cls : d.classes) j["classes"].push_back(vertex_list(cls.items()));
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : d.edges) j["edges"].push_back(vertex_list({e.a, e.b}));
    j["vertex_rotations"] = nlohmann::ordered_json::object();
    for (const auto& [v, rot] : d.vertex_rotations)
        j["vertex_rotations"][to_string(v)] = vertex_list(rot.items());
    j["crossings"] = nlohmann::ordered_json::array();
    for (const CrossingRecord& r : d.crossings) {
        nlohmann::ordered_json c;
        c["e"] = vertex_list({r.e.a, r.e.b});
        c["f"] = vertex_list({r.f.a, r.f.b});
        c["rotation"] = vertex_list(r.rotation.items());
        j["crossings"].push_back(std::move(c));
    }
    return j;
}

AbstractDrawing drawing_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("drawing: expected a JSON object");
    AbstractDrawing d;
    if (!j.contains("classes") || !j["classes"].is_array())
        throw ParseError("drawing: missing classes array");
    for (const auto& cls : j["classes"])
        d.classes.emplace_back(parse_vertex_list(cls, "classes"));
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) d.edges.push_back(parse_edge(e, "edges"));
    if (j.contains("vertex_rotations")) {
        if (!j["vertex_rotations"].is_object())
            throw ParseError("drawing: vertex_rotations must be an object");
        for (const auto& [key, val] : j["vertex_rotations"].items())
            d.vertex_rotations.emplace(parse_vertex(key),
                                       CyclicOrder(parse_vertex_list(val, "vertex_rotations")));
    }
    if (j.contains("crossings")) {
        for (const auto& c : j["crossings"]) {
            if (!c.is_object() || !c.contains("e") || !c.contains("f") || !c.contains("rotation"))
                throw ParseError("drawing: malformed crossing record");
            d.crossings.push_back(make_crossing(
                parse_edge(c["e"], "crossings"), parse_edge(c["f"], "crossings"),
                CyclicOrder(parse_vertex_list(c["rotation"], "crossings"))));
        }
    }
    d.normalize();
    return d;
}

nlohmann::ordered_json onepage_to_json(const OnePageDrawing& p) {
    nlohmann::ordered_json j;
    j["bounding_order"] = vertex_list(p.bounding_order.items());
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : p.edges) j["edges"].push_back(vertex_list({e.a, e.b}));
    return j;
}

OnePageDrawing onepage_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("bounding_order"))
        throw ParseError("one-page drawing: missing bounding_order");
    OnePageDrawing p;
    p.bounding_order = CyclicOrder(parse_vertex_list(j["bounding_order"], "bounding_order"));
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) p.edges.push_back(parse_edge(e, "edges"));
    return p;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

AbstractDrawing load_drawing(const std::string& path, bool allow_invalid) {
    AbstractDrawing d = drawing_from_json(load_json(path));
    if (!allow_invalid) {
        auto report = validate(d);
        if (!report.empty())
            throw Error("invalid drawing in " + path + ": " + report.front().kind + " (" +
                        report.front().detail + ")");
    }
    return d;
}

void save_drawing(const std::string& path, const AbstractDrawing& d) {
    write_file_atomic(path, drawing_to_json(d).dump(2) + "\n");
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp);
        out << content;
        if (!out.flush()) throw Error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot move " + tmp + " into place");
}

} // namespace mpcross

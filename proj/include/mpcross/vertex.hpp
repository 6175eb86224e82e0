#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace mpcross {

// A vertex of a multipartite drawing. Written "c(i)" in file formats,
// e.g. "3(2)" is the second vertex of class 3. Vertices with idx == 0
// stand for bare class labels ("3") and appear in rotation systems,
// where one vertex per class is enough.
struct Vertex {
    int cls = 0;
    int idx = 0;

    auto operator<=>(const Vertex&) const = default;
};

std::string to_string(Vertex v);

// Accepts "c" or "c(i)" with positive integers. Throws ParseError otherwise.
Vertex parse_vertex(const std::string& s);

inline std::uint64_t key_of(Vertex v) {
    return (std::uint64_t(std::uint32_t(v.cls)) << 32) | std::uint32_t(v.idx);
}

} // namespace mpcross

template <>
struct std::hash<mpcross::Vertex> {
    size_t operator()(const mpcross::Vertex& v) const noexcept {
        return std::hash<std::uint64_t>()(mpcross::key_of(v));
    }
};

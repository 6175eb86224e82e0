#include "mpcross/vertex.hpp"

#include "mpcross/errors.hpp"

#include <cctype>

namespace mpcross {

std::string to_string(Vertex v) {
    if (v.idx == 0) return std::to_string(v.cls);
    return std::to_string(v.cls) + "(" + std::to_string(v.idx) + ")";
}

namespace {

bool parse_int(const std::string& s, size_t& pos, int& out) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    long val = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        val = val * 10 + (s[pos] - '0');
        if (val > 1000000) return false;
        ++pos;
    }
    out = static_cast<int>(val);
    return true;
}

} // namespace

Vertex parse_vertex(const std::string& s) {
    size_t pos = 0;
    int cls = 0;
    if (!parse_int(s, pos, cls) || cls <= 0)
        throw ParseError("bad vertex identifier: '" + s + "'");
    if (pos == s.size()) return Vertex{cls, 0};
    int idx = 0;
    if (s[pos] != '(' || (++pos, !parse_int(s, pos, idx)) || idx <= 0 ||
        pos >= s.size() || s[pos] != ')' || pos + 1 != s.size())
        throw ParseError("bad vertex identifier: '" + s + "'");
    return Vertex{cls, idx};
}

} // namespace mpcross

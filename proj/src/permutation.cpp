#include "mpcross/permutation.hpp"

#include <algorithm>
#include <unordered_set>

namespace mpcross {

Permutation::Permutation(std::vector<Vertex> items) : items_(std::move(items)) {
    std::unordered_set<Vertex> seen;
    for (Vertex v : items_) {
        if (!seen.insert(v).second)
            throw Error("duplicate item " + to_string(v) + " in permutation");
    }
}

bool Permutation::contains(Vertex v) const {
    return std::find(items_.begin(), items_.end(), v) != items_.end();
}

std::optional<size_t> Permutation::position_of(Vertex v) const {
    auto it = std::find(items_.begin(), items_.end(), v);
    if (it == items_.end()) return std::nullopt;
    return size_t(it - items_.begin());
}

bool Permutation::before(Vertex a, Vertex b) const {
    auto pa = position_of(a);
    auto pb = position_of(b);
    if (!pa || !pb)
        throw MissingVertexError("before: vertex not in permutation");
    return *pa < *pb;
}

Permutation reverse(const Permutation& p) {
    std::vector<Vertex> items(p.items().rbegin(), p.items().rend());
    return Permutation(std::move(items));
}

Permutation concat(const std::vector<std::pair<int, Permutation>>& parts) {
    std::vector<Vertex> items;
    std::unordered_set<Vertex> seen;
    for (const auto& [sign, part] : parts) {
        const auto& src = part.items();
        for (size_t k = 0; k < src.size(); ++k) {
            Vertex v = sign >= 0 ? src[k] : src[src.size() - 1 - k];
            if (!seen.insert(v).second)
                throw OverlapError("concat: vertex " + to_string(v) + " occurs in two parts");
            items.push_back(v);
        }
    }
    return Permutation(std::move(items));
}

bool is_subpermutation(const Permutation& small, const Permutation& big) {
    size_t pos = 0;
    const auto& b = big.items();
    for (Vertex v : small) {
        while (pos < b.size() && b[pos] != v) ++pos;
        if (pos == b.size()) return false;
        ++pos;
    }
    return true;
}

Permutation prefix(const Permutation& p, size_t n) {
    std::vector<Vertex> items(p.items().begin(), p.items().begin() + n);
    return Permutation(std::move(items));
}

Permutation select(const Permutation& p, const std::vector<size_t>& positions) {
    std::vector<Vertex> items;
    items.reserve(positions.size());
    for (size_t i : positions) items.push_back(p[i]);
    return Permutation(std::move(items));
}

} // namespace mpcross

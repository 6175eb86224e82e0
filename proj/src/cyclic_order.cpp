#include "mpcross/cyclic_order.hpp"

#include "mpcross/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace mpcross {

namespace {

void canonicalize(std::vector<Vertex>& items) {
    if (items.empty()) return;
    auto it = std::min_element(items.begin(), items.end());
    std::rotate(items.begin(), it, items.end());
}

} // namespace

CyclicOrder::CyclicOrder(std::vector<Vertex> items) : items_(std::move(items)) {
    std::unordered_set<Vertex> seen;
    for (Vertex v : items_) {
        if (!seen.insert(v).second)
            throw Error("duplicate item " + to_string(v) + " in cyclic order");
    }
    canonicalize(items_);
}

bool CyclicOrder::contains(Vertex v) const {
    return std::find(items_.begin(), items_.end(), v) != items_.end();
}

std::optional<size_t> CyclicOrder::position_of(Vertex v) const {
    auto it = std::find(items_.begin(), items_.end(), v);
    if (it == items_.end()) return std::nullopt;
    return size_t(it - items_.begin());
}

CyclicOrder CyclicOrder::reversed() const {
    std::vector<Vertex> items(items_.rbegin(), items_.rend());
    return CyclicOrder(std::move(items));
}

CyclicOrder CyclicOrder::restricted(const std::function<bool(Vertex)>& keep) const {
    std::vector<Vertex> items;
    for (Vertex v : items_)
        if (keep(v)) items.push_back(v);
    return CyclicOrder(std::move(items));
}

std::vector<Vertex> CyclicOrder::starting_at(Vertex v) const {
    auto pos = position_of(v);
    if (!pos) throw MissingVertexError("starting_at: " + to_string(v) + " not in cyclic order");
    std::vector<Vertex> out;
    out.reserve(items_.size());
    for (size_t k = 0; k < items_.size(); ++k)
        out.push_back(items_[(*pos + k) % items_.size()]);
    return out;
}

bool interleaves(const CyclicOrder& c, std::pair<Vertex, Vertex> pair1,
                 std::pair<Vertex, Vertex> pair2) {
    const Vertex vs[4] = {pair1.first, pair1.second, pair2.first, pair2.second};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j])
                throw Error("interleaves: the four vertices must be distinct");
    size_t pos[4];
    for (int i = 0; i < 4; ++i) {
        auto p = c.position_of(vs[i]);
        if (!p) throw MissingVertexError("interleaves: " + to_string(vs[i]) + " not in cyclic order");
        pos[i] = *p;
    }
    // Walk the cycle from pair1.first; pair2's vertices interleave pair1
    // exactly when one of them is passed before pair1.second and the other
    // after.
    size_t n = c.size();
    auto offset = [&](size_t p) { return (p + n - pos[0]) % n; };
    size_t cut = offset(pos[1]);
    bool first_inside = offset(pos[2]) < cut;
    bool second_inside = offset(pos[3]) < cut;
    return first_inside != second_inside;
}

CyclicOrder cyclic(const Permutation& p) {
    return CyclicOrder(p.items());
}

} // namespace mpcross

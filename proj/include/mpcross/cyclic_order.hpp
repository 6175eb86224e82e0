#pragma once

#include "mpcross/permutation.hpp"
#include "mpcross/vertex.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace mpcross {

// A cyclic sequence of pairwise distinct vertices. Two cyclic orders are
// equal when one is a rotation of the other; a reflection is a different
// cyclic order. Stored in a canonical rotation with the smallest vertex
// first, so equality and serialization are plain comparisons.
class CyclicOrder {
public:
    CyclicOrder() = default;
    explicit CyclicOrder(std::vector<Vertex> items);

    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<Vertex>& items() const { return items_; }
    Vertex operator[](size_t i) const { return items_[i]; }

    bool contains(Vertex v) const;
    std::optional<size_t> position_of(Vertex v) const;

    CyclicOrder reversed() const;

    // Keeps exactly the vertices accepted by the predicate, cyclic order
    // preserved.
    CyclicOrder restricted(const std::function<bool(Vertex)>& keep) const;

    // The items as a linear sequence starting at the given vertex.
    std::vector<Vertex> starting_at(Vertex v) const;

    bool operator==(const CyclicOrder&) const = default;

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

private:
    std::vector<Vertex> items_;
};

// True when the two vertices of pair2 lie in different arcs of c as cut by
// the two vertices of pair1. The four vertices must be distinct and occur
// in c; a missing one raises MissingVertexError.
bool interleaves(const CyclicOrder& c, std::pair<Vertex, Vertex> pair1,
                 std::pair<Vertex, Vertex> pair2);

// Cyclic order of a linear sequence read clockwise.
CyclicOrder cyclic(const Permutation& p);

} // namespace mpcross

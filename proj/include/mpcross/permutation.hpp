#pragma once

#include "mpcross/errors.hpp"
#include "mpcross/vertex.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mpcross {

// A finite sequence of pairwise distinct vertices. Partite classes of a
// drawing are permutations: the left-to-right order is part of the data.
// Immutable after construction.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Vertex> items);

    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    Vertex operator[](size_t i) const { return items_[i]; }
    const std::vector<Vertex>& items() const { return items_; }

    bool contains(Vertex v) const;
    std::optional<size_t> position_of(Vertex v) const;

    // True when a occurs strictly before b. Both must occur.
    bool before(Vertex a, Vertex b) const;

    bool operator==(const Permutation&) const = default;

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

private:
    std::vector<Vertex> items_;
};

// A class label together with an orientation sign, as used in signed
// concatenations like [+A . -B].
struct SignedClass {
    int sign = +1; // +1 or -1
    int class_index = 0;

    auto operator<=>(const SignedClass&) const = default;
};

Permutation reverse(const Permutation& p);

// Concatenates the parts left to right, reversing those with sign -1.
// Throws OverlapError when two parts share a vertex.
Permutation concat(const std::vector<std::pair<int, Permutation>>& parts);

// True when small is obtained from big by deleting items (order kept).
bool is_subpermutation(const Permutation& small, const Permutation& big);

// First n items of p. n must not exceed p.size().
Permutation prefix(const Permutation& p, size_t n);

// Subsequence of p at the given ascending positions.
Permutation select(const Permutation& p, const std::vector<size_t>& positions);

} // namespace mpcross

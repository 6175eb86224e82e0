#pragma once

#include "mpcross/witness.hpp"

#include <cstdint>
#include <vector>

namespace mpcross {

struct RealizeOptions {
    long long budget = 10'000'000; // route expansions before BudgetExceededError
    std::uint64_t seed = 0;        // permutes route exploration order only
};

struct RealizeOutcome {
    bool realizable = false;
    std::optional<PlanarizedWitness> witness;
    long long expansions = 0;
};

// Searches for a simple spherical drawing inducing the prescribed rotation
// system, by inserting edges one at a time into a planarized map and
// routing each new edge through the current faces. The verdict is exact:
// an unrealizable outcome means the full route space was exhausted.
RealizeOutcome realize(const RotationSystem& rs, const RealizeOptions& opt = {});

// All combinatorially distinct completions: every reachable crossing
// pattern, deduplicated by crossing pair set plus crossing rotation
// multiset, sorted by that key. Empty exactly when unrealizable.
std::vector<AbstractDrawing> enumerate_completions(const RotationSystem& rs,
                                                   const RealizeOptions& opt = {});

// Deduplication key used by enumerate_completions.
std::string completion_key(const AbstractDrawing& d);

} // namespace mpcross

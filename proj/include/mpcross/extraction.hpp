#pragma once

#include "mpcross/drawing.hpp"
#include "mpcross/template.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mpcross {

// Crossing pattern of the four edges between {a, a2} and {b, c}, where a
// comes before a2 in their class. eta0 is the crossing-free pattern; the
// other four name the unique crossing by its edge pair and rotation.
enum class QuadColour { eta0, eta1, eta2, eta3, eta4 };

std::string to_string(QuadColour colour);

// Classifies the quad on {a, a2} x {b, c}. Raises UnknownEdgeError when one
// of the four edges is absent, SimplicityViolationError when the quad has
// two crossings or a crossing between edges sharing an endpoint, and Error
// when a crossing record carries a rotation no pattern matches.
QuadColour colour_quad(const AbstractDrawing& d, Vertex a, Vertex a2, Vertex b, Vertex c);

// Per-class subpermutations whose pairwise edge bundles are each drawn in
// two-block position: for classes i != j, E(i, j) is a one-page drawing
// over block i oriented by sign(j, i) followed by block j oriented by
// sign(i, j).
struct PairwiseOnePageCertificate {
    std::vector<Permutation> classes;
    SignFunction sign;
};

// Search knobs. budget caps candidate evaluations per operation call.
// stage_sizes optionally pins the per-stage target sizes consumed by
// extract_canonical in stage order; stages beyond the list fall back to
// the default rule (halve, but never below the target size).
struct ExtractOptions {
    long long budget = 10'000'000;
    std::vector<int> stage_sizes;
};

// Finds size-q subpermutations of every class of d that form a pairwise
// one-page certificate. Pairs are processed in lexicographic order; each
// pair search scans subpermutation pairs in colex order and returns the
// first that is a two-block drawing under some orientation. Raises
// BudgetExceededError; absent when the search is exhausted.
std::optional<PairwiseOnePageCertificate>
find_pairwise_onepage(const AbstractDrawing& d, int q, const ExtractOptions& opt = {});

// Which undisturbed block comes first after a three-block merge.
enum class MergeOrder { BC, CB };

struct OrderTwoResult {
    Permutation a, b, c;
    MergeOrder which = MergeOrder::BC;
};

// Given E(A, B) and E(A, C) each in one-page position over the ground
// block A, finds size-q subpermutations whose quads all carry one colour,
// eta2 (B block first) or eta1 (C block first), and certifies the merged
// three-block order. The colex-least monochromatic candidate wins. Raises
// SimplicityViolationError from colouring, BudgetExceededError, and Error
// when a precondition fails; absent when no candidate works.
std::optional<OrderTwoResult>
order_two(const AbstractDrawing& d, const Permutation& A, const Permutation& B,
          const Permutation& C, int q, const ExtractOptions& opt = {});

struct OrderClassesResult {
    Permutation a;
    std::vector<Permutation> blocks; // in input order
    std::vector<int> order;          // 1-based block indices, page order
};

// Given E(A, B_i) in one-page position for every block, orders all blocks
// on one side of A: order_two on each block pair, a transitivity check on
// the pairwise outcomes, then one verification of the merged order.
// Raises TransitivityViolationError when the pairwise outcomes form a
// cycle, and the order_two errors; absent when some pair search fails.
std::optional<OrderClassesResult>
order_classes(const AbstractDrawing& d, const Permutation& A,
              const std::vector<Permutation>& blocks, int q, const ExtractOptions& opt = {});

struct SeparateSidesResult {
    Permutation a, b, c;
};

// Given E(A, B) in one-page position over A and E(A, C) over reversed A,
// finds size-q subpermutations with no crossing between E(A', B') and
// E(A', C'), by monochromatic eta0 search. Raises the colouring errors and
// BudgetExceededError; absent when no candidate works.
std::optional<SeparateSidesResult>
separate_sides(const AbstractDrawing& d, const Permutation& A, const Permutation& B,
               const Permutation& C, int q, const ExtractOptions& opt = {});

struct ExtractionResult {
    std::vector<Permutation> classes;
    Template tmpl;
    std::vector<int> stage_sizes; // realized target per executed stage
};

// Recovers a canonical subdrawing on classes of size n: pairwise one-page
// extraction, then per class the plus side, the minus side, and every
// plus-minus block pair, shrinking class sizes stage by stage. The result
// passes verify_canonical on the induced subdrawing. Raises Error on
// unequal class sizes or a malformed stage schedule, BudgetExceededError,
// and the stage errors; absent when any stage fails or n exceeds the
// class size.
std::optional<ExtractionResult>
extract_canonical(const AbstractDrawing& d, int n, const ExtractOptions& opt = {});

} // namespace mpcross

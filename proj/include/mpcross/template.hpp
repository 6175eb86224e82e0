#pragma once

#include "mpcross/drawing.hpp"
#include "mpcross/realize.hpp"
#include "mpcross/rotation_system.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mpcross {

// Attachment data of one class: the other classes whose edge bundles reach
// this class from above (plus, read left to right) and from below (minus,
// read right to left). Entries are 1-based class indices.
struct TemplateClass {
    std::vector<int> plus;
    std::vector<int> minus;

    bool operator==(const TemplateClass&) const = default;
};

// A drawing template over m classes. Every class lists each remaining
// class exactly once across its two sides; the split and the two orders
// determine one multipartite drawing per class size, up to weak
// isomorphism, whenever the template is realizable.
struct Template {
    int m = 0;
    std::vector<TemplateClass> classes; // classes[i-1] describes class i

    // 1-based access with a range check.
    const TemplateClass& at(int i) const;

    bool operator==(const Template&) const = default;
};

// Structural report, empty exactly when t is a valid template.
std::vector<std::string> validate_template(const Template& t);

// Side membership for ordered pairs of distinct classes: at(j, i) is +1
// when class j lies on the plus side of class i, -1 when on the minus
// side. Queries outside the domain raise Error.
struct SignFunction {
    int m = 0;
    std::vector<std::vector<int>> values; // values[j-1][i-1], 0 unused

    int at(int j, int i) const;
};

// The sign table of a template. Raises InvalidTemplateError.
SignFunction sign_of(const Template& t);

// A template together with a class size, the input of the drawing
// builder.
struct CanonicalSpec {
    Template tmpl;
    int n = 1;
};

// Classes of the standard drawing on class size n: class i is the
// permutation i(1), ..., i(n).
std::vector<Permutation> standard_classes(int m, int n);

// Bounding order of one side of class i, built from explicitly given
// class permutations: the class itself (reversed on the minus side)
// followed by the side's blocks, each block reversed when its class keeps
// i on its own minus side. Absent when the side is empty.
std::optional<CyclicOrder> side_order(const std::vector<Permutation>& classes,
                                      const Template& t, int i, bool plus_side);

// The two bounding orders of class i in the standard drawing, plus side
// first. Raises InvalidTemplateError and Error on a bad class index or
// size.
std::pair<std::optional<CyclicOrder>, std::optional<CyclicOrder>>
induced_orders(const CanonicalSpec& spec, int i);

// Rotation system on the complete graph with one vertex per class: vertex
// i orders its neighbours plus side first, then minus side.
RotationSystem rotation_system_of(const Template& t);

// Realizability verdict with the witness that settled it. The witness is
// absent for a single class, where there is nothing to draw.
struct TemplateRealizability {
    bool realizable = false;
    std::optional<PlanarizedWitness> witness;
};
TemplateRealizability realizability_of(const Template& t, const RealizeOptions& opt = {});

// True when the class rotation system admits a drawing of the complete
// graph. Raises InvalidTemplateError and BudgetExceededError.
bool is_realizable(const Template& t, const RealizeOptions& opt = {});

// Whether edges e and f cross in the drawing the spec describes. Edges
// sharing a class are decided by endpoint interleaving on the relevant
// side order; edges over four distinct classes by the complete-graph
// verdict of the restricted rotation system, which raises
// UnrealizableTemplateError when that restriction admits no drawing.
bool crosses(const CanonicalSpec& spec, const Edge& e, const Edge& f);

// Builds the full drawing of the spec: standard classes, all cross-class
// edges, block rotations, and the crossing set of crosses. Options steer
// the route search that fixes crossing rotations over four distinct
// classes; any seed yields a weakly isomorphic result. Raises
// UnrealizableTemplateError.
AbstractDrawing canonical_drawing(const CanonicalSpec& spec, const RealizeOptions& opt = {});

// Report of every way d deviates from the drawing style t prescribes for
// the given classes: per class, both side orders are checked as one-page
// drawings, edges attached to opposite sides of a class must not cross,
// and every vertex rotation must match its block order. Empty report
// means d is drawn canonically for t.
std::vector<std::string> verify_canonical(const AbstractDrawing& d,
                                          const std::vector<Permutation>& classes,
                                          const Template& t);

// Reconstructs the template d is drawn by, relative to the given class
// permutations, or nullopt when no unique template fits. With one vertex
// per class the split is not determined by the drawing; the returned
// representative puts every class on the plus side, read from the
// rotation starting at the smallest other class.
std::optional<Template> template_of(const AbstractDrawing& d,
                                    const std::vector<Permutation>& classes);

nlohmann::ordered_json template_to_json(const Template& t);
Template template_from_json(const nlohmann::json& j);
Template load_template(const std::string& path);

nlohmann::ordered_json sign_to_json(const SignFunction& s);

} // namespace mpcross

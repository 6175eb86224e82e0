#pragma once

#include "mpcross/template.hpp"
#include "mpcross/witness.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mpcross {

// Geometry of one schematic figure: an axis-aligned box per class with its
// row of vertex points, and one corridor per class pair carrying the pair's
// edges as parallel strands.
struct RenderPlan {
    struct Box {
        int cls = 0;
        double x = 0, y = 0, w = 0, h = 0; // top left corner and extent
        // Point row inside the box, leftmost entry first. The leftmost
        // point stands for the highest position of the class, so entry k
        // is vertex cls(n - k).
        std::vector<std::pair<double, double>> points;
    };
    struct Corridor {
        int lo = 0, hi = 0; // the class pair, lo < hi
        // Polyline from the attachment on box lo to the attachment on box
        // hi; interior points are the corridor bends.
        std::vector<std::pair<double, double>> spine;
        double band = 0; // band width of the corridor
        // Cross-band offset per strand; strand (p, q) joining lo(p) to
        // hi(q) sits at entry (p - 1) * n + (q - 1).
        std::vector<double> strand_offsets;
    };
    std::vector<Box> boxes;          // class 1 first
    std::vector<Corridor> corridors; // ascending by class pair
    double width = 0, height = 0;    // canvas extent
};

// Plans the figure for a spec on the layout its witness induces: real
// nodes become box centres, crossing nodes become corridor bends, so
// corridors meet exactly where the witness crosses their class pairs. A
// corridor attaches to the top side of a box when the far class sits on
// the near class's plus side, and the top attachments run left to right
// in plus order; minus-side corridors attach on the bottom, right to
// left in minus order. With class size 1 the boxes shrink to points.
// Raises WitnessMismatchError when the witness is not a drawing of the
// spec's class rotation system, and Error on a class size below 1.
RenderPlan plan_figure(const CanonicalSpec& spec, const PlanarizedWitness& w);

// The planned figure as a standalone SVG 1.1 document. The picture is
// schematic; the authoritative crossing set is combinatorial and is
// embedded in a metadata block as the JSON crossing records of the
// drawing the spec defines. Output is byte identical across runs for
// equal inputs.
std::string render_svg(const CanonicalSpec& spec, const PlanarizedWitness& w);

} // namespace mpcross

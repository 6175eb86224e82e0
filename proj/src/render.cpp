#include "mpcross/render.hpp"

#include "mpcross/drawing_json.hpp"
#include "mpcross/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace mpcross {

namespace {

using Point = std::pair<double, double>;

bool cyclically_equal(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) return false;
    if (u.empty()) return true;
    for (size_t shift = 0; shift < v.size(); ++shift) {
        if (v[shift] != u[0]) continue;
        bool same = true;
        for (size_t k = 1; k < u.size() && same; ++k)
            same = v[(shift + k) % v.size()] == u[k];
        if (same) return true;
    }
    return false;
}

void require_witness_for(const PlanarizedWitness& w, const RotationSystem& rs) {
    auto problems = check_witness(w);
    if (!problems.empty())
        throw WitnessMismatchError("render: witness fails embedding checks: " + problems.front());
    if (w.system.labels != rs.labels || w.system.edges != rs.edges)
        throw WitnessMismatchError("render: witness draws a different class graph");
    for (size_t v = 0; v < rs.rot.size(); ++v)
        if (!cyclically_equal(rs.rot[v], w.system.rot[v]))
            throw WitnessMismatchError("render: witness rotation differs at class " +
                                       std::to_string(v + 1));
}

int twin_slot(const PlanarizedWitness& w, int node, int slot) {
    const auto& d = w.rotations[size_t(node)][size_t(slot)];
    const auto& back = w.rotations[size_t(d.to)];
    for (size_t l = 0; l < back.size(); ++l)
        if (back[l].edge == d.edge && back[l].to == node) return int(l);
    throw WitnessMismatchError("render: witness dart has no twin");
}

// Distinct nodes of every face, in walk order. A face walk leaves a node
// by the dart after the arriving one in clockwise rotation.
std::vector<std::vector<int>> trace_faces(const PlanarizedWitness& w) {
    std::vector<std::vector<char>> seen;
    size_t total = 0;
    for (const auto& rots : w.rotations) {
        seen.emplace_back(rots.size(), 0);
        total += rots.size();
    }
    std::vector<std::vector<int>> faces;
    for (size_t u = 0; u < w.rotations.size(); ++u) {
        for (size_t k = 0; k < w.rotations[u].size(); ++k) {
            if (seen[u][k]) continue;
            std::vector<int> nodes;
            int cu = int(u), ck = int(k);
            for (size_t steps = 0; steps <= total; ++steps) {
                if (seen[size_t(cu)][size_t(ck)]) break;
                seen[size_t(cu)][size_t(ck)] = 1;
                if (std::find(nodes.begin(), nodes.end(), cu) == nodes.end())
                    nodes.push_back(cu);
                int v = w.rotations[size_t(cu)][size_t(ck)].to;
                int l = twin_slot(w, cu, ck);
                cu = v;
                ck = (l + 1) % int(w.rotations[size_t(v)].size());
            }
            faces.push_back(std::move(nodes));
        }
    }
    return faces;
}

// Straight-line layout of the planarization: the largest face is pinned
// on a circle and every other node relaxes to the barycentre of its
// neighbours.
std::vector<Point> layout_nodes(const PlanarizedWitness& w) {
    const size_t count = w.nodes.size();
    std::vector<Point> pos(count, {0.0, 0.0});
    if (count == 1) return pos;
    if (count == 2) {
        pos[0] = {-1.0, 0.0};
        pos[1] = {1.0, 0.0};
        return pos;
    }
    auto faces = trace_faces(w);
    size_t outer = 0;
    for (size_t f = 1; f < faces.size(); ++f)
        if (faces[f].size() > faces[outer].size()) outer = f;
    const auto& rim = faces[outer];
    std::vector<char> pinned(count, 0);
    for (size_t t = 0; t < rim.size(); ++t) {
        double angle = 2.0 * std::numbers::pi * double(t) / double(rim.size());
        pos[size_t(rim[t])] = {std::cos(angle), std::sin(angle)};
        pinned[size_t(rim[t])] = 1;
    }
    for (int round = 0; round < 3000; ++round) {
        for (size_t u = 0; u < count; ++u) {
            if (pinned[u] || w.rotations[u].empty()) continue;
            double sx = 0, sy = 0;
            for (const auto& d : w.rotations[u]) {
                sx += pos[size_t(d.to)].first;
                sy += pos[size_t(d.to)].second;
            }
            pos[u] = {sx / double(w.rotations[u].size()), sy / double(w.rotations[u].size())};
        }
    }
    return pos;
}

double clamp(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

Point attachment(const RenderPlan::Box& box, const Template& t, int near, int far) {
    const auto& plus = t.at(near).plus;
    const auto& minus = t.at(near).minus;
    auto at_plus = std::find(plus.begin(), plus.end(), far);
    if (at_plus != plus.end()) {
        double slot = double(at_plus - plus.begin()) + 1.0;
        return {box.x + box.w * slot / (double(plus.size()) + 1.0), box.y};
    }
    auto at_minus = std::find(minus.begin(), minus.end(), far);
    double slot = double(minus.size() - (at_minus - minus.begin()));
    return {box.x + box.w * slot / (double(minus.size()) + 1.0), box.y + box.h};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

std::string polyline_points(const std::vector<Point>& pts) {
    std::string out;
    for (size_t k = 0; k < pts.size(); ++k) {
        if (k) out += ' ';
        out += fmt(pts[k].first) + ',' + fmt(pts[k].second);
    }
    return out;
}

// Polyline shifted sideways by offset, with averaged normals at bends.
std::vector<Point> shifted_polyline(const std::vector<Point>& pts, double offset) {
    auto normal_of = [](const Point& a, const Point& b) -> Point {
        double dx = b.first - a.first, dy = b.second - a.second;
        double len = std::hypot(dx, dy);
        if (len < 1e-9) return {0.0, 0.0};
        return {-dy / len, dx / len};
    };
    std::vector<Point> out(pts.size());
    for (size_t k = 0; k < pts.size(); ++k) {
        Point n{0.0, 0.0};
        if (k > 0) {
            Point in = normal_of(pts[k - 1], pts[k]);
            n = {n.first + in.first, n.second + in.second};
        }
        if (k + 1 < pts.size()) {
            Point outn = normal_of(pts[k], pts[k + 1]);
            n = {n.first + outn.first, n.second + outn.second};
        }
        double len = std::hypot(n.first, n.second);
        if (len > 1e-9) n = {n.first / len, n.second / len};
        out[k] = {pts[k].first + n.first * offset, pts[k].second + n.second * offset};
    }
    return out;
}

const char* strand_colour(size_t corridor_index) {
    static const char* palette[] = {"#c23b3b", "#2f6db3", "#2e8b57", "#b8860b", "#7b4fa6",
                                    "#c2679a", "#5f9ea0", "#8b5a2b", "#556b2f", "#4169a1"};
    return palette[corridor_index % (sizeof palette / sizeof palette[0])];
}

} // namespace

RenderPlan plan_figure(const CanonicalSpec& spec, const PlanarizedWitness& w) {
    const Template& t = spec.tmpl;
    const RotationSystem rs = rotation_system_of(t);
    if (spec.n < 1) throw Error("render: class size must be at least 1");
    require_witness_for(w, rs);

    const auto raw = layout_nodes(w);

    RenderPlan plan;
    plan.width = 960;
    plan.height = 720;
    const double margin = 120;

    double x0 = raw[0].first, x1 = raw[0].first, y0 = raw[0].second, y1 = raw[0].second;
    for (const Point& p : raw) {
        x0 = std::min(x0, p.first);
        x1 = std::max(x1, p.first);
        y0 = std::min(y0, p.second);
        y1 = std::max(y1, p.second);
    }
    double scale = 1.0;
    const double bw = x1 - x0, bh = y1 - y0;
    const double sx = (plan.width - 2 * margin) / bw, sy = (plan.height - 2 * margin) / bh;
    if (bw > 1e-9 && bh > 1e-9)
        scale = std::min(sx, sy);
    else if (bw > 1e-9)
        scale = sx;
    else if (bh > 1e-9)
        scale = sy;
    auto place = [&](const Point& p) -> Point {
        return {(p.first - x0) * scale + (plan.width - scale * bw) / 2,
                (p.second - y0) * scale + (plan.height - scale * bh) / 2};
    };

    std::vector<int> node_of_class(size_t(t.m) + 1, -1);
    for (size_t u = 0; u < w.nodes.size(); ++u)
        if (!w.nodes[u].crossing) node_of_class[size_t(w.nodes[u].vid) + 1] = int(u);

    const int n = spec.n;
    const double box_w = n == 1 ? 0.0 : 22.0 * n + 18.0;
    const double box_h = n == 1 ? 0.0 : 34.0;
    for (int i = 1; i <= t.m; ++i) {
        const Point centre = place(raw[size_t(node_of_class[size_t(i)])]);
        RenderPlan::Box box;
        box.cls = i;
        box.w = box_w;
        box.h = box_h;
        box.x = centre.first - box_w / 2;
        box.y = centre.second - box_h / 2;
        for (int k = 0; k < n; ++k) {
            double px = n == 1 ? box.x : box.x + 9.0 + 22.0 * k + 11.0;
            box.points.emplace_back(px, centre.second);
        }
        plan.boxes.push_back(std::move(box));
    }

    const int strands = n * n;
    const double band = clamp(6.0 + 2.4 * strands, 10.0, 30.0);
    for (int lo = 1; lo <= t.m; ++lo) {
        for (int hi = lo + 1; hi <= t.m; ++hi) {
            RenderPlan::Corridor c;
            c.lo = lo;
            c.hi = hi;
            c.band = band;
            c.spine.push_back(attachment(plan.boxes[size_t(lo - 1)], t, lo, hi));
            const int eid = rs.edge_id(lo - 1, hi - 1);
            const auto& path = w.segment_map[size_t(eid)];
            for (size_t k = 1; k + 1 < path.size(); ++k)
                c.spine.push_back(place(raw[size_t(path[k])]));
            c.spine.push_back(attachment(plan.boxes[size_t(hi - 1)], t, hi, lo));
            const double usable = band - 5.0;
            for (int s = 0; s < strands; ++s)
                c.strand_offsets.push_back(
                    strands == 1 ? 0.0 : -usable / 2 + usable * double(s) / double(strands - 1));
            plan.corridors.push_back(std::move(c));
        }
    }
    return plan;
}

std::string render_svg(const CanonicalSpec& spec, const PlanarizedWitness& w) {
    const RenderPlan plan = plan_figure(spec, w);
    const AbstractDrawing full = canonical_drawing(spec);
    nlohmann::ordered_json meta;
    meta["crossings"] = drawing_to_json(full)["crossings"];

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt(plan.width) << "\" height=\"" << fmt(plan.height) << "\" viewBox=\"0 0 "
        << fmt(plan.width) << ' ' << fmt(plan.height) << "\">\n";
    svg << "<!-- figure format 1 -->\n";
    svg << "<metadata id=\"crossing-list\">" << xml_escape(meta.dump()) << "</metadata>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << fmt(plan.width) << "\" height=\""
        << fmt(plan.height) << "\" fill=\"#ffffff\"/>\n";

    for (const auto& c : plan.corridors)
        svg << "<polyline points=\"" << polyline_points(c.spine)
            << "\" fill=\"none\" stroke=\"#ececec\" stroke-width=\"" << fmt(c.band)
            << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";

    const int n = spec.n;
    for (const auto& box : plan.boxes)
        if (box.w > 0)
            svg << "<rect x=\"" << fmt(box.x) << "\" y=\"" << fmt(box.y) << "\" width=\""
                << fmt(box.w) << "\" height=\"" << fmt(box.h)
                << "\" rx=\"4\" fill=\"#ffffff\" stroke=\"#222222\" stroke-width=\"1.3\"/>\n";

    for (size_t ci = 0; ci < plan.corridors.size(); ++ci) {
        const auto& c = plan.corridors[ci];
        const auto& lo_box = plan.boxes[size_t(c.lo - 1)];
        const auto& hi_box = plan.boxes[size_t(c.hi - 1)];
        for (int p = 1; p <= n; ++p) {
            for (int q = 1; q <= n; ++q) {
                const double off = c.strand_offsets[size_t((p - 1) * n + (q - 1))];
                std::vector<Point> pts = shifted_polyline(c.spine, off);
                pts.insert(pts.begin(), lo_box.points[size_t(n - p)]);
                pts.push_back(hi_box.points[size_t(n - q)]);
                svg << "<polyline points=\"" << polyline_points(pts)
                    << "\" fill=\"none\" stroke=\"" << strand_colour(ci)
                    << "\" stroke-width=\"1.1\" opacity=\"0.85\"/>\n";
            }
        }
    }

    for (const auto& c : plan.corridors)
        for (size_t k = 1; k + 1 < c.spine.size(); ++k)
            svg << "<circle cx=\"" << fmt(c.spine[k].first) << "\" cy=\""
                << fmt(c.spine[k].second)
                << "\" r=\"3.50\" fill=\"#ffffff\" stroke=\"#999999\"/>\n";

    for (const auto& box : plan.boxes) {
        for (size_t k = 0; k < box.points.size(); ++k) {
            svg << "<circle cx=\"" << fmt(box.points[k].first) << "\" cy=\""
                << fmt(box.points[k].second) << "\" r=\"2.60\" fill=\"#111111\"/>\n";
            if (n >= 2)
                svg << "<text x=\"" << fmt(box.points[k].first) << "\" y=\""
                    << fmt(box.points[k].second + 13)
                    << "\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"8.5\" "
                       "fill=\"#666666\" text-anchor=\"middle\">"
                    << (n - int(k)) << "</text>\n";
        }
        svg << "<text x=\"" << fmt(box.x - 6) << "\" y=\"" << fmt(box.y - 6)
            << "\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"13\" "
               "font-weight=\"bold\" fill=\"#111111\">"
            << box.cls << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace mpcross

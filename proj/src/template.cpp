#include "mpcross/template.hpp"

#include "mpcross/drawing_json.hpp"
#include "mpcross/k4_table.hpp"
#include "mpcross/onepage.hpp"
#include "mpcross/witness.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace mpcross {

namespace {

// +1 when class `of` sits on the plus side of class `wrt`. Callers have
// validated the template.
int sign_in(const Template& t, int of, int wrt) {
    const auto& plus = t.classes[size_t(wrt - 1)].plus;
    return std::find(plus.begin(), plus.end(), of) != plus.end() ? +1 : -1;
}

void require_valid(const Template& t) {
    auto report = validate_template(t);
    if (!report.empty())
        throw InvalidTemplateError("template: " + report.front());
}

std::string class_list(const std::array<int, 4>& q) {
    std::ostringstream os;
    os << q[0] << "," << q[1] << "," << q[2] << "," << q[3];
    return os.str();
}

} // namespace

const TemplateClass& Template::at(int i) const {
    if (i < 1 || i > m || size_t(m) != classes.size())
        throw Error("template: class index " + std::to_string(i) + " out of range");
    return classes[size_t(i - 1)];
}

std::vector<std::string> validate_template(const Template& t) {
    std::vector<std::string> out;
    if (t.m < 1) {
        out.push_back("class count must be at least 1");
        return out;
    }
    if (int(t.classes.size()) != t.m) {
        out.push_back("expected " + std::to_string(t.m) + " class entries, found " +
                      std::to_string(t.classes.size()));
        return out;
    }
    for (int i = 1; i <= t.m; ++i) {
        const auto& c = t.classes[size_t(i - 1)];
        std::vector<int> count(size_t(t.m) + 1, 0);
        auto scan = [&](const std::vector<int>& part, const char* side) {
            for (int j : part) {
                std::string where = "class " + std::to_string(i) + " " + side;
                if (j < 1 || j > t.m)
                    out.push_back(where + ": index " + std::to_string(j) + " out of range");
                else if (j == i)
                    out.push_back(where + ": lists its own class");
                else if (count[size_t(j)]++ > 0)
                    out.push_back(where + ": index " + std::to_string(j) + " repeated");
            }
        };
        scan(c.plus, "plus");
        scan(c.minus, "minus");
        for (int j = 1; j <= t.m; ++j)
            if (j != i && count[size_t(j)] == 0)
                out.push_back("class " + std::to_string(i) + ": index " + std::to_string(j) +
                              " missing");
    }
    return out;
}

int SignFunction::at(int j, int i) const {
    if (j < 1 || j > m || i < 1 || i > m || j == i)
        throw Error("sign function: pair (" + std::to_string(j) + "," + std::to_string(i) +
                    ") outside the domain");
    return values[size_t(j - 1)][size_t(i - 1)];
}

SignFunction sign_of(const Template& t) {
    require_valid(t);
    SignFunction s;
    s.m = t.m;
    s.values.assign(size_t(t.m), std::vector<int>(size_t(t.m), 0));
    for (int i = 1; i <= t.m; ++i) {
        for (int j : t.classes[size_t(i - 1)].plus)
            s.values[size_t(j - 1)][size_t(i - 1)] = +1;
        for (int j : t.classes[size_t(i - 1)].minus)
            s.values[size_t(j - 1)][size_t(i - 1)] = -1;
    }
    return s;
}

std::vector<Permutation> standard_classes(int m, int n) {
    std::vector<Permutation> out;
    out.reserve(size_t(m));
    for (int i = 1; i <= m; ++i) {
        std::vector<Vertex> items;
        items.reserve(size_t(n));
        for (int p = 1; p <= n; ++p)
            items.push_back(Vertex{i, p});
        out.emplace_back(std::move(items));
    }
    return out;
}

std::optional<CyclicOrder> side_order(const std::vector<Permutation>& classes,
                                      const Template& t, int i, bool plus_side) {
    const TemplateClass& c = t.at(i);
    const std::vector<int>& side = plus_side ? c.plus : c.minus;
    if (side.empty())
        return std::nullopt;
    std::vector<std::pair<int, Permutation>> parts;
    parts.reserve(side.size() + 1);
    parts.emplace_back(plus_side ? +1 : -1, classes.at(size_t(i - 1)));
    for (int j : side)
        parts.emplace_back(sign_in(t, i, j), classes.at(size_t(j - 1)));
    return signed_cycle(parts);
}

std::pair<std::optional<CyclicOrder>, std::optional<CyclicOrder>>
induced_orders(const CanonicalSpec& spec, int i) {
    require_valid(spec.tmpl);
    if (spec.n < 1)
        throw Error("induced orders: class size must be at least 1");
    if (i < 1 || i > spec.tmpl.m)
        throw Error("induced orders: class index " + std::to_string(i) + " out of range");
    auto classes = standard_classes(spec.tmpl.m, spec.n);
    return {side_order(classes, spec.tmpl, i, true),
            side_order(classes, spec.tmpl, i, false)};
}

RotationSystem rotation_system_of(const Template& t) {
    require_valid(t);
    RotationSystem rs;
    for (int i = 1; i <= t.m; ++i)
        rs.labels.push_back(std::to_string(i));
    for (int a = 0; a < t.m; ++a)
        for (int b = a + 1; b < t.m; ++b)
            rs.edges.emplace_back(a, b);
    rs.rot.resize(size_t(t.m));
    for (int i = 1; i <= t.m; ++i) {
        auto& r = rs.rot[size_t(i - 1)];
        for (int j : t.classes[size_t(i - 1)].plus)
            r.push_back(j - 1);
        for (int j : t.classes[size_t(i - 1)].minus)
            r.push_back(j - 1);
    }
    rs.sort_edges();
    return rs;
}

TemplateRealizability realizability_of(const Template& t, const RealizeOptions& opt) {
    require_valid(t);
    if (t.m == 1)
        return {true, std::nullopt};
    RotationSystem rs = rotation_system_of(t);
    if (t.m >= 3 && !is_realizable_ks(rs, opt))
        return {false, std::nullopt};
    RealizeOutcome out = realize(rs, opt);
    return {out.realizable, std::move(out.witness)};
}

bool is_realizable(const Template& t, const RealizeOptions& opt) {
    require_valid(t);
    if (t.m <= 2)
        return true;
    return is_realizable_ks(rotation_system_of(t), opt);
}

namespace {

void require_spec_edge(const CanonicalSpec& spec, const Edge& g) {
    for (Vertex v : {g.a, g.b})
        if (v.cls < 1 || v.cls > spec.tmpl.m || v.idx < 1 || v.idx > spec.n)
            throw Error("edge endpoint " + to_string(v) + " is not a vertex of the drawing");
    if (g.a.cls == g.b.cls)
        throw Error("edge " + to_string(g) + " joins two vertices of one class");
}

// Shared-class crossing test: restrict the side order of the shared class
// to the four endpoints and check interleaving. Returns the restricted
// order through `rot` when the edges cross.
bool shared_class_crossing(const CanonicalSpec& spec,
                           const std::vector<Permutation>& classes, const Edge& e,
                           const Edge& f, int shared, CyclicOrder* rot) {
    int j = (e.a.cls == shared) ? e.b.cls : e.a.cls;
    int l = (f.a.cls == shared) ? f.b.cls : f.a.cls;
    int sj = sign_in(spec.tmpl, j, shared);
    int sl = sign_in(spec.tmpl, l, shared);
    if (sj != sl)
        return false;
    auto ord = side_order(classes, spec.tmpl, shared, sj > 0);
    CyclicOrder quad = ord->restricted(
        [&](Vertex v) { return v == e.a || v == e.b || v == f.a || v == f.b; });
    if (!interleaves(quad, {e.a, e.b}, {f.a, f.b}))
        return false;
    if (rot)
        *rot = quad;
    return true;
}

std::pair<int, int> class_pair(const Edge& g) {
    return {std::min(g.a.cls, g.b.cls), std::max(g.a.cls, g.b.cls)};
}

// Complete-graph verdict for four distinct classes, via the table of
// labelled four-vertex systems.
struct QuadVerdict {
    bool has_crossing = false;
    std::pair<int, int> first, second; // crossing class pairs, each min first
};

QuadVerdict quad_verdict(const RotationSystem& rs_full, const std::array<int, 4>& quad) {
    std::vector<int> keep;
    for (int c : quad)
        keep.push_back(c - 1);
    RotationSystem sub = restrict_rs(rs_full, keep);
    K4Verdict v = k4_verdict(sub);
    if (!v.realizable)
        throw UnrealizableTemplateError("classes " + class_list(quad) +
                                        " admit no drawing of the complete graph");
    QuadVerdict out;
    if (v.crossing) {
        auto cls_of = [&](int idx) { return std::stoi(sub.labels[size_t(idx)]); };
        auto norm = [](int a, int b) {
            return std::pair<int, int>{std::min(a, b), std::max(a, b)};
        };
        out.has_crossing = true;
        out.first = norm(cls_of(v.crossing->first.first), cls_of(v.crossing->first.second));
        out.second = norm(cls_of(v.crossing->second.first), cls_of(v.crossing->second.second));
    }
    return out;
}

} // namespace

bool crosses(const CanonicalSpec& spec, const Edge& e, const Edge& f) {
    require_valid(spec.tmpl);
    if (spec.n < 1)
        throw Error("crossing test: class size must be at least 1");
    require_spec_edge(spec, e);
    require_spec_edge(spec, f);
    if (e.shares_endpoint(f))
        return false;
    std::set<int> ec{e.a.cls, e.b.cls}, fc{f.a.cls, f.b.cls};
    std::vector<int> shared;
    std::set_intersection(ec.begin(), ec.end(), fc.begin(), fc.end(),
                          std::back_inserter(shared));
    if (!shared.empty()) {
        auto classes = standard_classes(spec.tmpl.m, spec.n);
        return shared_class_crossing(spec, classes, e, f, shared.front(), nullptr);
    }
    std::array<int, 4> quad{e.a.cls, e.b.cls, f.a.cls, f.b.cls};
    std::sort(quad.begin(), quad.end());
    QuadVerdict v = quad_verdict(rotation_system_of(spec.tmpl), quad);
    if (!v.has_crossing)
        return false;
    auto pe = class_pair(e), pf = class_pair(f);
    return (v.first == pe && v.second == pf) || (v.first == pf && v.second == pe);
}

namespace {

// Crossing data of one four-class restriction, with the crossing rotation
// read from a route-search witness so that repeated builds with one seed
// agree byte for byte.
struct QuadDrawingInfo {
    bool has_crossing = false;
    std::pair<int, int> first, second;
    std::vector<int> rotation_classes; // clockwise class ids at the crossing
};

QuadDrawingInfo quad_drawing_info(const RotationSystem& rs_full,
                                  const std::array<int, 4>& quad,
                                  const RealizeOptions& opt) {
    QuadDrawingInfo info;
    QuadVerdict v = quad_verdict(rs_full, quad);
    if (!v.has_crossing)
        return info;
    std::vector<int> keep;
    for (int c : quad)
        keep.push_back(c - 1);
    RotationSystem sub = restrict_rs(rs_full, keep);
    RealizeOutcome out = realize(sub, opt);
    if (!out.realizable || !out.witness)
        throw Error("route search lost a drawing the table promises for classes " +
                    class_list(quad));
    AbstractDrawing w = crossings_of_witness(*out.witness);
    if (w.crossings.size() != 1)
        throw Error("restriction to classes " + class_list(quad) +
                    " produced an unexpected crossing count");
    const CrossingRecord& r = w.crossings.front();
    auto pe = class_pair(r.e), pf = class_pair(r.f);
    if (!((pe == v.first && pf == v.second) || (pe == v.second && pf == v.first)))
        throw Error("witness and table disagree on classes " + class_list(quad));
    info.has_crossing = true;
    info.first = v.first;
    info.second = v.second;
    for (Vertex v4 : r.rotation)
        info.rotation_classes.push_back(v4.cls);
    return info;
}

} // namespace

AbstractDrawing canonical_drawing(const CanonicalSpec& spec, const RealizeOptions& opt) {
    require_valid(spec.tmpl);
    if (spec.n < 1)
        throw Error("drawing build: class size must be at least 1");
    if (!is_realizable(spec.tmpl, opt))
        throw UnrealizableTemplateError(
            "the template admits no drawing of the complete graph on its classes");
    const int m = spec.tmpl.m, n = spec.n;

    AbstractDrawing d;
    d.classes = standard_classes(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int p = 1; p <= n; ++p)
                for (int q = 1; q <= n; ++q)
                    d.edges.push_back(make_edge(Vertex{i, p}, Vertex{j, q}));

    // Every vertex of class i shares one rotation: the plus blocks left to
    // right, then the minus blocks.
    for (int i = 1; i <= m; ++i) {
        const TemplateClass& c = spec.tmpl.at(i);
        std::vector<std::pair<int, Permutation>> parts;
        for (int j : c.plus)
            parts.emplace_back(sign_in(spec.tmpl, i, j), d.classes[size_t(j - 1)]);
        for (int j : c.minus)
            parts.emplace_back(sign_in(spec.tmpl, i, j), d.classes[size_t(j - 1)]);
        CyclicOrder rot = signed_cycle(parts);
        for (int p = 1; p <= n; ++p)
            d.vertex_rotations[Vertex{i, p}] = rot;
    }

    RotationSystem rs_full = rotation_system_of(spec.tmpl);
    std::map<std::array<int, 4>, QuadDrawingInfo> quads;
    for (size_t x = 0; x < d.edges.size(); ++x) {
        for (size_t y = x + 1; y < d.edges.size(); ++y) {
            const Edge& e = d.edges[x];
            const Edge& f = d.edges[y];
            if (e.shares_endpoint(f))
                continue;
            std::set<int> ec{e.a.cls, e.b.cls}, fc{f.a.cls, f.b.cls};
            std::vector<int> shared;
            std::set_intersection(ec.begin(), ec.end(), fc.begin(), fc.end(),
                                  std::back_inserter(shared));
            if (!shared.empty()) {
                CyclicOrder rot;
                if (shared_class_crossing(spec, d.classes, e, f, shared.front(), &rot))
                    d.crossings.push_back(make_crossing(e, f, std::move(rot)));
                continue;
            }
            std::array<int, 4> quad{e.a.cls, e.b.cls, f.a.cls, f.b.cls};
            std::sort(quad.begin(), quad.end());
            auto it = quads.find(quad);
            if (it == quads.end())
                it = quads.emplace(quad, quad_drawing_info(rs_full, quad, opt))
                         .first;
            const QuadDrawingInfo& info = it->second;
            if (!info.has_crossing)
                continue;
            auto pe = class_pair(e), pf = class_pair(f);
            if (!((info.first == pe && info.second == pf) ||
                  (info.first == pf && info.second == pe)))
                continue;
            std::map<int, Vertex> by_class{
                {e.a.cls, e.a}, {e.b.cls, e.b}, {f.a.cls, f.a}, {f.b.cls, f.b}};
            std::vector<Vertex> rot;
            for (int c : info.rotation_classes)
                rot.push_back(by_class.at(c));
            d.crossings.push_back(make_crossing(e, f, CyclicOrder(std::move(rot))));
        }
    }
    d.normalize();

    auto report = validate(d);
    if (!report.empty())
        throw Error("drawing build produced an inconsistent drawing: " +
                    report.front().kind + " (" + report.front().detail + ")");
    return d;
}

namespace {

int class_index_of(const std::map<Vertex, int>& membership, Vertex v) {
    auto it = membership.find(v);
    return it == membership.end() ? 0 : it->second;
}

} // namespace

std::vector<std::string> verify_canonical(const AbstractDrawing& d,
                                          const std::vector<Permutation>& classes,
                                          const Template& t) {
    std::vector<std::string> report;
    auto tv = validate_template(t);
    if (!tv.empty()) {
        for (const auto& s : tv)
            report.push_back("template: " + s);
        return report;
    }
    if (int(classes.size()) != t.m) {
        report.push_back("drawing provides " + std::to_string(classes.size()) +
                         " classes but the template describes " + std::to_string(t.m));
        return report;
    }

    std::map<Vertex, int> membership;
    bool structural_ok = true;
    for (int i = 1; i <= t.m; ++i) {
        for (Vertex v : classes[size_t(i - 1)]) {
            if (!d.has_vertex(v)) {
                report.push_back("class " + std::to_string(i) + " lists " + to_string(v) +
                                 " which is not in the drawing");
                structural_ok = false;
            }
            if (!membership.emplace(v, i).second) {
                report.push_back(to_string(v) + " appears in two classes");
                structural_ok = false;
            }
        }
    }
    if (membership.size() != d.vertices().size()) {
        report.push_back("classes do not cover every vertex of the drawing");
        structural_ok = false;
    }
    if (!structural_ok)
        return report;

    for (int i = 1; i <= t.m; ++i) {
        for (bool plus_side : {true, false}) {
            auto ord = side_order(classes, t, i, plus_side);
            if (!ord)
                continue;
            const std::vector<int>& side =
                plus_side ? t.classes[size_t(i - 1)].plus : t.classes[size_t(i - 1)].minus;
            std::set<int> side_set(side.begin(), side.end());
            std::vector<Edge> subset;
            for (const Edge& e : d.edges) {
                int ca = class_index_of(membership, e.a);
                int cb = class_index_of(membership, e.b);
                if (ca == i && side_set.count(cb))
                    subset.push_back(e);
                else if (cb == i && side_set.count(ca))
                    subset.push_back(e);
            }
            if (!is_rho_drawing(d, *ord, subset))
                report.push_back("class " + std::to_string(i) + " " +
                                 (plus_side ? "plus" : "minus") +
                                 " side is not drawn in its prescribed one-page order");
        }
    }

    for (const CrossingRecord& r : d.crossings) {
        int ae = class_index_of(membership, r.e.a), be = class_index_of(membership, r.e.b);
        int af = class_index_of(membership, r.f.a), bf = class_index_of(membership, r.f.b);
        for (int i : {ae, be}) {
            if (i != af && i != bf)
                continue;
            int j = (ae == i) ? be : ae;
            int l = (af == i) ? bf : af;
            if (sign_in(t, j, i) != sign_in(t, l, i))
                report.push_back("edges on opposite sides of class " + std::to_string(i) +
                                 " cross: " + to_string(r.e) + " and " + to_string(r.f));
        }
    }

    std::map<Vertex, std::set<Vertex>> nbr;
    for (const Edge& e : d.edges) {
        nbr[e.a].insert(e.b);
        nbr[e.b].insert(e.a);
    }
    for (int i = 1; i <= t.m; ++i) {
        const TemplateClass& c = t.classes[size_t(i - 1)];
        std::vector<std::pair<int, Permutation>> parts;
        for (int j : c.plus)
            parts.emplace_back(sign_in(t, i, j), classes[size_t(j - 1)]);
        for (int j : c.minus)
            parts.emplace_back(sign_in(t, i, j), classes[size_t(j - 1)]);
        CyclicOrder blocks = signed_cycle(parts);
        for (Vertex w : classes[size_t(i - 1)]) {
            const std::set<Vertex>& around = nbr[w];
            CyclicOrder expected =
                blocks.restricted([&](Vertex v) { return around.count(v) > 0; });
            auto it = d.vertex_rotations.find(w);
            CyclicOrder actual = (it == d.vertex_rotations.end()) ? CyclicOrder{} : it->second;
            if (actual != expected)
                report.push_back("rotation at " + to_string(w) +
                                 " does not match the template's block order");
        }
    }
    return report;
}

namespace {

// Edges of d between two classes of the given partition.
std::vector<Edge> edges_between(const AbstractDrawing& d,
                                const std::map<Vertex, int>& membership, int i, int j) {
    std::vector<Edge> out;
    for (const Edge& e : d.edges) {
        int ca = class_index_of(membership, e.a);
        int cb = class_index_of(membership, e.b);
        if ((ca == i && cb == j) || (ca == j && cb == i))
            out.push_back(e);
    }
    return out;
}

} // namespace

std::optional<Template> template_of(const AbstractDrawing& d,
                                    const std::vector<Permutation>& classes) {
    const int m = int(classes.size());
    if (m == 0)
        return std::nullopt;
    std::map<Vertex, int> membership;
    for (int i = 1; i <= m; ++i) {
        if (classes[size_t(i - 1)].empty())
            return std::nullopt;
        for (Vertex v : classes[size_t(i - 1)]) {
            if (!d.has_vertex(v) || !membership.emplace(v, i).second)
                return std::nullopt;
        }
    }
    if (membership.size() != d.vertices().size())
        return std::nullopt;

    Template t;
    t.m = m;
    t.classes.resize(size_t(m));

    bool all_single = true;
    for (const auto& c : classes)
        all_single = all_single && c.size() == 1;

    if (all_single) {
        // One vertex per class: crossings between two classes cannot pin a
        // side split, so normalize to an all-plus template read from the
        // rotation, cut at the smallest other class.
        for (int i = 1; i <= m; ++i) {
            if (m == 1)
                break;
            Vertex w = classes[size_t(i - 1)][0];
            auto it = d.vertex_rotations.find(w);
            if (it == d.vertex_rotations.end())
                return std::nullopt;
            int smallest = (i == 1) ? 2 : 1;
            Vertex anchor = classes[size_t(smallest - 1)][0];
            if (!it->second.contains(anchor))
                return std::nullopt;
            std::vector<int> order;
            std::set<int> seen;
            for (Vertex v : it->second.starting_at(anchor)) {
                int c = class_index_of(membership, v);
                if (c == 0 || c == i || !seen.insert(c).second)
                    return std::nullopt;
                order.push_back(c);
            }
            if (int(order.size()) != m - 1)
                return std::nullopt;
            t.classes[size_t(i - 1)].plus = std::move(order);
        }
    } else {
        for (const auto& c : classes)
            if (c.size() < 2)
                return std::nullopt;
        // Side membership and block direction per class pair: exactly one
        // signed two-block order must fit the pair's edges.
        std::vector<std::vector<int>> block_sign(size_t(m) + 1,
                                                 std::vector<int>(size_t(m) + 1, 0));
        std::vector<std::set<int>> plus_set(size_t(m) + 1), minus_set(size_t(m) + 1);
        std::vector<std::vector<std::vector<Edge>>> pair_edges(
            size_t(m) + 1, std::vector<std::vector<Edge>>(size_t(m) + 1));
        for (int i = 1; i <= m; ++i) {
            for (int j = i + 1; j <= m; ++j) {
                std::vector<Edge> eij = edges_between(d, membership, i, j);
                if (eij.empty())
                    return std::nullopt;
                pair_edges[size_t(i)][size_t(j)] = eij;
                pair_edges[size_t(j)][size_t(i)] = std::move(eij);
                int found = 0, fi = 0, fj = 0;
                for (int si : {+1, -1}) {
                    for (int sj : {+1, -1}) {
                        CyclicOrder ord = signed_cycle(
                            {{si, classes[size_t(i - 1)]}, {sj, classes[size_t(j - 1)]}});
                        if (is_rho_drawing(d, ord, pair_edges[size_t(i)][size_t(j)])) {
                            ++found;
                            fi = si;
                            fj = sj;
                        }
                    }
                }
                if (found != 1)
                    return std::nullopt;
                (fi > 0 ? plus_set : minus_set)[size_t(i)].insert(j);
                (fj > 0 ? plus_set : minus_set)[size_t(j)].insert(i);
                block_sign[size_t(i)][size_t(j)] = fj;
                block_sign[size_t(j)][size_t(i)] = fi;
            }
        }
        // Order each side by three-block fit, then check the relation is a
        // strict total order before sorting by it.
        for (int i = 1; i <= m; ++i) {
            for (bool plus_side : {true, false}) {
                const std::set<int>& members =
                    plus_side ? plus_set[size_t(i)] : minus_set[size_t(i)];
                std::vector<int> side(members.begin(), members.end());
                std::map<std::pair<int, int>, bool> before;
                for (size_t a = 0; a < side.size(); ++a) {
                    for (size_t b = a + 1; b < side.size(); ++b) {
                        int j = side[a], l = side[b];
                        std::vector<Edge> both = pair_edges[size_t(i)][size_t(j)];
                        const auto& more = pair_edges[size_t(i)][size_t(l)];
                        both.insert(both.end(), more.begin(), more.end());
                        int self = plus_side ? +1 : -1;
                        CyclicOrder jl = signed_cycle(
                            {{self, classes[size_t(i - 1)]},
                             {block_sign[size_t(i)][size_t(j)], classes[size_t(j - 1)]},
                             {block_sign[size_t(i)][size_t(l)], classes[size_t(l - 1)]}});
                        CyclicOrder lj = signed_cycle(
                            {{self, classes[size_t(i - 1)]},
                             {block_sign[size_t(i)][size_t(l)], classes[size_t(l - 1)]},
                             {block_sign[size_t(i)][size_t(j)], classes[size_t(j - 1)]}});
                        bool pjl = is_rho_drawing(d, jl, both);
                        bool plj = is_rho_drawing(d, lj, both);
                        if (pjl == plj)
                            return std::nullopt;
                        before[{j, l}] = pjl;
                        before[{l, j}] = plj;
                    }
                }
                for (int j : side)
                    for (int l : side)
                        for (int k : side) {
                            if (j == l || l == k || j == k)
                                continue;
                            if (before[{j, l}] && before[{l, k}] && !before[{j, k}])
                                return std::nullopt;
                        }
                std::sort(side.begin(), side.end(),
                          [&](int a, int b) { return before[{a, b}]; });
                (plus_side ? t.classes[size_t(i - 1)].plus
                           : t.classes[size_t(i - 1)].minus) = std::move(side);
            }
        }
    }

    if (!verify_canonical(d, classes, t).empty())
        return std::nullopt;
    return t;
}

nlohmann::ordered_json template_to_json(const Template& t) {
    nlohmann::ordered_json j;
    j["m"] = t.m;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : t.classes) {
        nlohmann::ordered_json entry;
        entry["plus"] = c.plus;
        entry["minus"] = c.minus;
        arr.push_back(std::move(entry));
    }
    j["classes"] = std::move(arr);
    return j;
}

Template template_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw ParseError("template: expected a JSON object");
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw ParseError("template: missing integer field m");
    if (!j.contains("classes") || !j["classes"].is_array())
        throw ParseError("template: missing classes array");
    Template t;
    t.m = j["m"].get<int>();
    for (const auto& entry : j["classes"]) {
        if (!entry.is_object() || !entry.contains("plus") || !entry.contains("minus") ||
            !entry["plus"].is_array() || !entry["minus"].is_array())
            throw ParseError("template: every class needs plus and minus arrays");
        TemplateClass c;
        for (const auto& part : {std::pair{&entry["plus"], &c.plus},
                                 std::pair{&entry["minus"], &c.minus}}) {
            for (const auto& v : *part.first) {
                if (!v.is_number_integer())
                    throw ParseError("template: class indices must be integers");
                part.second->push_back(v.get<int>());
            }
        }
        t.classes.push_back(std::move(c));
    }
    return t;
}

Template load_template(const std::string& path) {
    return template_from_json(load_json(path));
}

nlohmann::ordered_json sign_to_json(const SignFunction& s) {
    nlohmann::ordered_json j;
    j["m"] = s.m;
    auto arr = nlohmann::ordered_json::array();
    for (int i = 1; i <= s.m; ++i) {
        for (int jj = 1; jj <= s.m; ++jj) {
            if (jj == i)
                continue;
            nlohmann::ordered_json entry;
            entry["j"] = jj;
            entry["i"] = i;
            entry["sign"] = s.at(jj, i);
            arr.push_back(std::move(entry));
        }
    }
    j["signs"] = std::move(arr);
    return j;
}

} // namespace mpcross

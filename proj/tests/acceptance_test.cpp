// Acceptance gate for the toolkit: eight end-to-end checks, one pass/fail
// line each. Exit status is the number of failed checks.

#include "mpcross/drawing_json.hpp"
#include "mpcross/errors.hpp"
#include "mpcross/extraction.hpp"
#include "mpcross/k4_table.hpp"
#include "mpcross/onepage.hpp"
#include "mpcross/render.hpp"
#include "mpcross/template.hpp"

#include "support/euler_oracle.hpp"
#include "support/expand_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace mpcross;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string format_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

Template five_classes() {
    Template t;
    t.m = 5;
    t.classes = {
        {{3, 2}, {4, 5}},
        {{}, {3, 1, 5, 4}},
        {{1, 2}, {5, 4}},
        {{2}, {3, 5, 1}},
        {{3, 1, 4}, {2}},
    };
    return t;
}

Template all_plus_cyclic_shifted() {
    Template t;
    t.m = 4;
    t.classes = {
        {{2, 3, 4}, {}},
        {{3, 4, 1}, {}},
        {{4, 1, 2}, {}},
        {{1, 3, 2}, {}},
    };
    return t;
}

RotationSystem four_vertex_counterexample() {
    RotationSystem rs;
    rs.labels = {"1", "2", "3", "4"};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) rs.edges.emplace_back(a, b);
    rs.rot = {{1, 2, 3}, {2, 3, 0}, {3, 0, 1}, {0, 2, 1}};
    rs.sort_edges();
    return rs;
}

Template random_template(std::mt19937_64& rng, int m) {
    Template t;
    t.m = m;
    t.classes.resize(size_t(m));
    for (int i = 1; i <= m; ++i) {
        std::vector<int> others;
        for (int j = 1; j <= m; ++j)
            if (j != i) others.push_back(j);
        std::shuffle(others.begin(), others.end(), rng);
        size_t cut = rng() % (others.size() + 1);
        auto& c = t.classes[size_t(i - 1)];
        c.plus.assign(others.begin(), others.begin() + long(cut));
        c.minus.assign(others.begin() + long(cut), others.end());
    }
    return t;
}

std::set<std::pair<Edge, Edge>> pair_set(const std::vector<CrossingRecord>& recs) {
    std::set<std::pair<Edge, Edge>> s;
    for (const auto& r : recs) {
        Edge e = r.e, f = r.f;
        if (f < e) std::swap(e, f);
        s.insert({e, f});
    }
    return s;
}

std::vector<Edge> bundle(const Permutation& x, const Permutation& y) {
    std::vector<Edge> out;
    for (Vertex u : x)
        for (Vertex v : y) out.push_back(make_edge(u, v));
    return out;
}

Permutation oriented_block(const std::vector<Permutation>& classes, const SignFunction& sig,
                           int i, int j) {
    return sig.at(i, j) == +1 ? classes[size_t(j - 1)] : reverse(classes[size_t(j - 1)]);
}

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

int run_cli(const std::string& args, const std::filesystem::path& dir) {
    const std::string cmd = std::string(MPCROSS_CLI) + " " + args + " > " +
                            (dir / "stdout.txt").string() + " 2> " +
                            (dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

// Samples used by checks 6 and 8.
struct SynthSample {
    Template t;
    int n = 0;
    AbstractDrawing d;
};
std::vector<SynthSample> synth_samples;

bool check_1(std::string& note) {
    Timer timer;
    const auto outcome = realize(four_vertex_counterexample());
    const double elapsed = timer.secs();
    if (outcome.realizable) {
        note = "the four-vertex counterexample system was reported drawable";
        return false;
    }
    if (outcome.expansions >= RealizeOptions{}.budget) {
        note = "the verdict ran into the search budget instead of refusing";
        return false;
    }
    if (elapsed >= 1.0) {
        note = "the refusal took " + format_secs(elapsed) + ", limit is 1.00s";
        return false;
    }

    const auto dir = std::filesystem::temp_directory_path() / "mpcross_acceptance";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "counterexample.json");
        out << template_to_json(all_plus_cyclic_shifted()).dump(2) << "\n";
    }
    const int rc =
        run_cli("template realizable --template " + (dir / "counterexample.json").string(), dir);
    if (rc != 1) {
        note = "the realizable command exited with " + std::to_string(rc) + " instead of 1";
        return false;
    }
    note = "refused in " + format_secs(elapsed) + ", command line agrees";
    return true;
}

bool check_2(std::string& note) {
    Timer timer;
    const Template g5 = five_classes();
    if (!is_realizable(g5)) {
        note = "the five-class example was reported undrawable";
        return false;
    }
    const AbstractDrawing d = canonical_drawing({g5, 3});
    const auto classes = standard_classes(5, 3);
    const auto report = verify_canonical(d, classes, g5);
    if (!report.empty()) {
        note = "built drawing fails its own style check: " + report.front();
        return false;
    }

    for (int i = 1; i <= 5; ++i) {
        std::vector<Edge> all_of_class;
        size_t expected_crossings = 0;
        for (bool plus : {true, false}) {
            std::vector<Edge> side;
            for (int j : (plus ? g5.at(i).plus : g5.at(i).minus)) {
                auto more = bundle(classes[size_t(i - 1)], classes[size_t(j - 1)]);
                side.insert(side.end(), more.begin(), more.end());
            }
            all_of_class.insert(all_of_class.end(), side.begin(), side.end());
            const auto order = side_order(classes, g5, i, plus);
            if (!order) {
                if (!side.empty()) {
                    note = "class " + std::to_string(i) + " lost a side order";
                    return false;
                }
                continue;
            }
            if (!is_rho_drawing(d, *order, side)) {
                note = "class " + std::to_string(i) +
                       (plus ? " plus" : " minus") + " side is not the listed one-page drawing";
                return false;
            }
            expected_crossings += from_onepage({*order, side}).crossings.size();
        }
        if (induce_edges(d, all_of_class).crossings.size() != expected_crossings) {
            note = "edges at class " + std::to_string(i) +
                   " cross outside the two one-page parts";
            return false;
        }
    }

    const auto recovered = template_of(d, classes);
    if (!recovered || !(*recovered == g5)) {
        note = "reading the template back off the drawing failed";
        return false;
    }
    const double elapsed = timer.secs();
    if (elapsed >= 10.0) {
        note = "round trip took " + format_secs(elapsed) + ", limit is 10.00s";
        return false;
    }
    note = "drawing, side decomposition, and read-back agree in " + format_secs(elapsed);
    return true;
}

bool check_3(std::string& note) {
    const std::string regenerated = k4_table_to_json(k4_table()).dump(2) + "\n";
    std::ifstream in(std::string(MPCROSS_DATA_DIR) + "/k4_table.json");
    if (!in.good()) {
        note = "committed table file is missing";
        return false;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() != regenerated) {
        note = "regenerated table differs from the committed file";
        return false;
    }

    const auto committed = nlohmann::json::parse(buf.str());
    int live_count = 0;
    for (const K4Entry& e : k4_table())
        if (e.realizable) ++live_count;
    if (committed["realizable_count"].get<int>() != live_count) {
        note = "realizable count disagrees with the committed file";
        return false;
    }

    for (const K4Entry& entry : k4_table()) {
        if (!entry.realizable) continue;
        const auto completions = enumerate_completions(entry.system);
        if (completions.empty()) {
            note = "a drawable entry has no completions";
            return false;
        }
        std::set<std::set<std::pair<Edge, Edge>>> verdicts;
        for (const AbstractDrawing& d : completions) verdicts.insert(pair_set(d.crossings));
        if (verdicts.size() != 1) {
            note = "a drawable entry admits two different crossing verdicts";
            return false;
        }
        std::set<std::pair<Edge, Edge>> expected;
        if (entry.crossing_edges) {
            auto edge_of = [&](int id) {
                auto [a, b] = entry.system.edges[size_t(id)];
                return make_edge(parse_vertex(entry.system.labels[size_t(a)]),
                                 parse_vertex(entry.system.labels[size_t(b)]));
            };
            Edge e = edge_of(entry.crossing_edges->first);
            Edge f = edge_of(entry.crossing_edges->second);
            if (f < e) std::swap(e, f);
            expected.insert({e, f});
        }
        if (*verdicts.begin() != expected) {
            note = "a table verdict differs from its enumerated completions";
            return false;
        }
    }

    const auto counterexample = four_vertex_counterexample();
    bool found = false;
    for (const K4Entry& entry : k4_table()) {
        bool same = true;
        for (size_t v = 0; v < 4 && same; ++v)
            same = cyclically_equal(entry.system.rot[v], counterexample.rot[v]);
        if (same) {
            found = true;
            if (entry.realizable) {
                note = "the counterexample system is marked drawable in the table";
                return false;
            }
        }
    }
    if (!found) {
        note = "the counterexample system is missing from the table";
        return false;
    }
    note = "table matches the committed file; " + std::to_string(live_count) +
           " drawable entries, each with one crossing verdict";
    return true;
}

bool check_4(std::string& note) {
    Timer timer;
    // Two vertices in the small class, three in the large one; the two
    // possible rotations of a small-class vertex are the two cyclic orders
    // of its three neighbours.
    auto system_with = [](bool first_forward, bool second_forward) {
        RotationSystem rs;
        rs.labels = {"1(1)", "1(2)", "2(1)", "2(2)", "2(3)"};
        for (int a = 0; a < 2; ++a)
            for (int b = 2; b < 5; ++b) rs.edges.emplace_back(a, b);
        rs.rot.resize(5);
        rs.rot[0] = first_forward ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 4, 3};
        rs.rot[1] = second_forward ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 4, 3};
        for (int b = 2; b < 5; ++b) rs.rot[size_t(b)] = {0, 1};
        rs.sort_edges();
        return rs;
    };
    auto one_crossing_per_quad = [](const AbstractDrawing& d) {
        const Vertex a1{1, 1}, a2{1, 2};
        for (int bi = 1; bi <= 3; ++bi) {
            for (int bj = bi + 1; bj <= 3; ++bj) {
                const std::set<Vertex> quad{a1, a2, Vertex{2, bi}, Vertex{2, bj}};
                size_t count = 0;
                for (const CrossingRecord& r : d.crossings) {
                    if (quad.count(r.e.a) && quad.count(r.e.b) && quad.count(r.f.a) &&
                        quad.count(r.f.b))
                        ++count;
                }
                if (count != 1) return false;
            }
        }
        return true;
    };

    // Completions are bucketed up to relabelling inside each class and up to
    // mirror reflection, using the crossing records as the invariant.
    auto iso_invariant = [](const AbstractDrawing& d) {
        static const int aperms[2][2] = {{1, 2}, {2, 1}};
        static const int bperms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                         {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
        std::string best;
        for (const auto& ap : aperms) {
            for (const auto& bp : bperms) {
                auto map_vertex = [&](Vertex v) {
                    return v.cls == 1 ? Vertex{1, ap[v.idx - 1]} : Vertex{2, bp[v.idx - 1]};
                };
                for (bool mirror : {false, true}) {
                    std::vector<std::string> recs;
                    for (const CrossingRecord& r : d.crossings) {
                        std::string ea = to_string(make_edge(map_vertex(r.e.a), map_vertex(r.e.b)));
                        std::string eb = to_string(make_edge(map_vertex(r.f.a), map_vertex(r.f.b)));
                        if (eb < ea) std::swap(ea, eb);
                        auto items = r.rotation.items();
                        for (Vertex& v : items) v = map_vertex(v);
                        if (mirror) std::reverse(items.begin(), items.end());
                        std::string rot;
                        for (size_t start = 0; start < items.size(); ++start) {
                            std::string cand;
                            for (size_t k = 0; k < items.size(); ++k)
                                cand += to_string(items[(start + k) % items.size()]) + ",";
                            if (rot.empty() || cand < rot) rot = cand;
                        }
                        recs.push_back(ea + "x" + eb + "@" + rot);
                    }
                    std::sort(recs.begin(), recs.end());
                    std::string key;
                    for (const std::string& r : recs) key += r + ";";
                    if (best.empty() || key < best) best = key;
                }
            }
        }
        return best;
    };

    std::set<std::string> equal_classes, distinct_classes;
    for (bool first : {true, false}) {
        for (bool second : {true, false}) {
            const auto rs = system_with(first, second);
            const auto completions = enumerate_completions(rs);
            std::set<std::string> engine_keys;
            for (const AbstractDrawing& d : completions) engine_keys.insert(completion_key(d));
            const auto oracle = testsupport::euler_completions(rs);
            if (engine_keys != std::set<std::string>(oracle.begin(), oracle.end())) {
                note = "route engine and global enumeration disagree on a rotation system";
                return false;
            }
            for (const AbstractDrawing& d : completions)
                if (one_crossing_per_quad(d))
                    (first == second ? equal_classes : distinct_classes).insert(iso_invariant(d));
        }
    }
    if (equal_classes.size() != 2) {
        note = "equal rotations: expected 2 classes of filtered completions, got " +
               std::to_string(equal_classes.size());
        return false;
    }
    if (distinct_classes.size() != 1) {
        note = "different rotations: expected 1 class of filtered completions, got " +
               std::to_string(distinct_classes.size()) +
               " (route engine and an independent global enumeration agree on the full "
               "completion lists; with different end rotations the total crossing count is "
               "always even, so no completion can have all three crossings)";
        return false;
    }
    const double elapsed = timer.secs();
    if (elapsed >= 30.0) {
        note = "catalogue took " + format_secs(elapsed) + ", limit is 30.00s";
        return false;
    }
    note = "2 classes for equal and 1 for different rotations, in " + format_secs(elapsed);
    return true;
}

bool check_5(std::string& note) {
    std::mt19937_64 rng(40105);
    long instances = 0, mutated = 0;
    auto agreement = [&](const AbstractDrawing& d, const Permutation& A, const Permutation& B) {
        const bool natural = is_natural_pair(d, A, B);
        const bool page = is_rho_drawing(d, signed_cycle({{+1, A}, {+1, B}}), bundle(A, B));
        return natural == page;
    };
    for (int round = 0; round < 1100; ++round) {
        const int na = 1 + int(rng() % 8), nb = 1 + int(rng() % 8);
        std::vector<Vertex> avs, bvs;
        for (int k = 1; k <= na; ++k) avs.push_back(Vertex{1, k});
        for (int k = 1; k <= nb; ++k) bvs.push_back(Vertex{2, k});
        std::shuffle(avs.begin(), avs.end(), rng);
        std::shuffle(bvs.begin(), bvs.end(), rng);
        const Permutation A(avs), B(bvs);

        std::vector<Vertex> order;
        const int shape = int(rng() % 3);
        if (shape == 0) {
            order = avs;
            order.insert(order.end(), bvs.begin(), bvs.end());
        } else if (shape == 1) {
            order = avs;
            order.insert(order.end(), bvs.rbegin(), bvs.rend());
        } else {
            order = avs;
            order.insert(order.end(), bvs.begin(), bvs.end());
            std::shuffle(order.begin(), order.end(), rng);
        }
        const AbstractDrawing d = from_onepage({CyclicOrder(order), bundle(A, B)});
        ++instances;
        if (!agreement(d, A, B)) {
            note = "a one-page instance split the two checks";
            return false;
        }

        if (!d.crossings.empty()) {
            AbstractDrawing corrupted = d;
            const size_t pick = rng() % corrupted.crossings.size();
            if (rng() % 2) {
                corrupted.crossings.erase(corrupted.crossings.begin() + long(pick));
            } else {
                auto items = corrupted.crossings[pick].rotation.items();
                std::reverse(items.begin(), items.end());
                corrupted.crossings[pick].rotation = CyclicOrder(items);
            }
            ++mutated;
            if (!agreement(corrupted, A, B)) {
                note = "a corrupted instance split the two checks";
                return false;
            }
        }
    }
    note = std::to_string(instances) + " instances and " + std::to_string(mutated) +
           " corruptions, zero disagreements";
    return true;
}

bool check_6(std::string& note) {
    Timer timer;
    std::mt19937_64 rng(61);
    synth_samples.clear();
    int sampled = 0;
    while (sampled < 200) {
        const int m = 2 + int(rng() % 3);
        const int n = 1 + int(rng() % 3);
        const Template t = random_template(rng, m);
        const auto r = realizability_of(t);
        if (!r.realizable) continue;
        ++sampled;

        const CanonicalSpec spec{t, n};
        const auto strands = testsupport::expansion_crossings(t, n, *r.witness);
        const std::set<std::pair<Edge, Edge>> expected(strands.begin(), strands.end());

        const AbstractDrawing d1 = canonical_drawing(spec, RealizeOptions{10'000'000, 1});
        std::set<std::pair<Edge, Edge>> predicate;
        for (size_t x = 0; x < d1.edges.size(); ++x)
            for (size_t y = x + 1; y < d1.edges.size(); ++y)
                if (crosses(spec, d1.edges[x], d1.edges[y]))
                    predicate.insert({d1.edges[x], d1.edges[y]});
        if (predicate != expected) {
            note = "predicate crossings differ from the expanded witness at sample " +
                   std::to_string(sampled);
            return false;
        }
        if (pair_set(d1.crossings) != expected) {
            note = "built drawing crossings differ from the expanded witness at sample " +
                   std::to_string(sampled);
            return false;
        }

        const AbstractDrawing d2 = canonical_drawing(spec, RealizeOptions{10'000'000, 2});
        std::map<Vertex, Vertex> identity;
        for (Vertex v : d1.vertices()) identity[v] = v;
        if (!weak_iso(d1, d2, identity)) {
            note = "two builds with different seeds are not equivalent at sample " +
                   std::to_string(sampled);
            return false;
        }

        synth_samples.push_back({t, n, d1});
    }
    note = "200 drawable samples match the expanded witness and rebuild equivalently, in " +
           format_secs(timer.secs());
    return true;
}

bool check_7(std::string& note) {
    Timer timer;
    std::mt19937_64 rng(70);
    std::vector<Template> two_block_types;
    for (bool first_plus : {true, false}) {
        for (bool second_plus : {true, false}) {
            Template t;
            t.m = 2;
            t.classes.resize(2);
            (first_plus ? t.classes[0].plus : t.classes[0].minus) = {2};
            (second_plus ? t.classes[1].plus : t.classes[1].minus) = {1};
            two_block_types.push_back(t);
        }
    }

    int sampled = 0;
    while (sampled < 50) {
        const int m = 2 + int(sampled % 2);
        const Template t = random_template(rng, m);
        if (!is_realizable(t)) continue;
        ++sampled;
        const AbstractDrawing d4 = canonical_drawing({t, 4});
        const auto res = extract_canonical(d4, 2);
        if (!res) {
            note = "extraction came back empty at sample " + std::to_string(sampled);
            return false;
        }
        std::vector<Vertex> kept;
        for (const Permutation& cls : res->classes)
            for (Vertex v : cls) kept.push_back(v);
        if (!verify_canonical(induce_vertices(d4, kept), res->classes, res->tmpl).empty()) {
            note = "extracted subdrawing fails the style check at sample " +
                   std::to_string(sampled);
            return false;
        }
        if (m == 2) {
            const bool known = std::any_of(two_block_types.begin(), two_block_types.end(),
                                           [&](const Template& k) { return k == res->tmpl; });
            if (!known) {
                note = "a two-class extraction returned an unknown bounding order type";
                return false;
            }
        }
    }
    const double elapsed = timer.secs();
    if (elapsed >= 300.0) {
        note = "extraction suite took " + format_secs(elapsed) + ", limit is 300.00s";
        return false;
    }
    note = "50 round trips extracted and verified in " + format_secs(elapsed);
    return true;
}

bool check_8(std::string& note) {
    if (synth_samples.empty()) {
        note = "no synthesized samples to inspect (check 6 must run first)";
        return false;
    }
    long quads = 0, merges = 0, splits = 0;
    for (const auto& sample : synth_samples) {
        const auto& d = sample.d;
        const int n = sample.n;
        const Template& t = sample.t;
        const auto classes = standard_classes(t.m, n);
        const SignFunction sig = sign_of(t);

        if (n >= 2) {
            const auto all = d.vertices();
            for (int i = 1; i <= t.m; ++i) {
                const Permutation& ground = classes[size_t(i - 1)];
                for (size_t p = 0; p < ground.size(); ++p) {
                    for (size_t p2 = p + 1; p2 < ground.size(); ++p2) {
                        for (size_t x = 0; x < all.size(); ++x) {
                            if (all[x].cls == i) continue;
                            for (size_t y = x + 1; y < all.size(); ++y) {
                                if (all[y].cls == i) continue;
                                try {
                                    colour_quad(d, ground[p], ground[p2], all[x], all[y]);
                                    ++quads;
                                } catch (const Error& e) {
                                    note = "a quad refused a colour: " + std::string(e.what());
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }

        for (int i = 1; i <= t.m; ++i) {
            for (bool plus : {true, false}) {
                const auto& side = plus ? t.at(i).plus : t.at(i).minus;
                const Permutation ground =
                    plus ? classes[size_t(i - 1)] : reverse(classes[size_t(i - 1)]);
                for (size_t x = 0; x < side.size(); ++x) {
                    for (size_t y = x + 1; y < side.size(); ++y) {
                        const Permutation bx = oriented_block(classes, sig, i, side[x]);
                        const Permutation by = oriented_block(classes, sig, i, side[y]);
                        const auto merged = order_two(d, ground, bx, by, n);
                        if (!merged || merged->which != MergeOrder::BC) {
                            note = "a same-side block pair did not merge block first";
                            return false;
                        }
                        ++merges;
                        for (size_t p = 0; p + 1 < size_t(n); ++p)
                            for (size_t p2 = p + 1; p2 < size_t(n); ++p2)
                                for (Vertex b : bx)
                                    for (Vertex c : by) {
                                        if (colour_quad(d, ground[p], ground[p2], b, c) !=
                                                QuadColour::eta2 ||
                                            colour_quad(d, ground[p], ground[p2], c, b) !=
                                                QuadColour::eta1) {
                                            note = "a same-side quad left the two expected "
                                                   "colours";
                                            return false;
                                        }
                                    }
                    }
                }
            }
            for (int j : t.at(i).plus) {
                for (int k : t.at(i).minus) {
                    const Permutation& ground = classes[size_t(i - 1)];
                    const Permutation bj = oriented_block(classes, sig, i, j);
                    const Permutation bk = oriented_block(classes, sig, i, k);
                    if (!separate_sides(d, ground, bj, bk, n)) {
                        note = "an opposite-side block pair had no colourless core";
                        return false;
                    }
                    ++splits;
                    for (size_t p = 0; p + 1 < size_t(n); ++p)
                        for (size_t p2 = p + 1; p2 < size_t(n); ++p2)
                            for (Vertex b : bj)
                                for (Vertex c : bk)
                                    if (colour_quad(d, ground[p], ground[p2], b, c) !=
                                        QuadColour::eta0) {
                                        note = "an opposite-side quad is not colourless";
                                        return false;
                                    }
                }
            }
        }
    }
    note = std::to_string(quads) + " quads coloured, " + std::to_string(merges) +
           " same-side merges, " + std::to_string(splits) + " side splits, all as stated";
    return true;
}

} // namespace

int main() {
    struct Check {
        int number;
        const char* title;
        bool (*run)(std::string&);
    };
    const Check checks[] = {
        {1, "non-drawable four-vertex system is refused quickly", check_1},
        {2, "five-class example round trips through build and read-back", check_2},
        {3, "four-vertex table is reproducible with unique verdicts", check_3},
        {4, "one-crossing-per-quad catalogue has the stated sizes", check_4},
        {5, "pairwise naturality equals the one-page check", check_5},
        {6, "crossing predicate matches the expanded witness", check_6},
        {7, "extraction round trips on random drawable samples", check_7},
        {8, "quad colours stay in range with the stated side behaviour", check_8},
    };

    int failures = 0;
    for (const Check& check : checks) {
        std::string note;
        bool ok = false;
        try {
            ok = check.run(note);
        } catch (const std::exception& e) {
            note = std::string("unexpected error: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s  %d  %s: %s\n", ok ? "PASS" : "FAIL", check.number, check.title,
                    note.c_str());
        std::fflush(stdout);
    }
    return failures;
}

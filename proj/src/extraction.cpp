#include "mpcross/extraction.hpp"

#include "mpcross/onepage.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace mpcross {

namespace {

constexpr size_t kMaxSearchWidth = 20;

struct SearchBudget {
    long long remaining = 0;

    void spend(long long cost) {
        remaining -= cost;
        if (remaining < 0)
            throw BudgetExceededError("extraction: search budget exhausted");
    }
};

// Next bitmask with the same popcount (Gosper). The caller stops once the
// result reaches 1 << width.
uint32_t next_same_size(uint32_t v) {
    uint32_t c = v & (0u - v);
    uint32_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

std::vector<size_t> mask_positions(uint32_t mask) {
    std::vector<size_t> out;
    for (size_t b = 0; mask != 0; ++b, mask >>= 1)
        if (mask & 1u)
            out.push_back(b);
    return out;
}

Permutation select_mask(const Permutation& p, uint32_t mask) {
    return select(p, mask_positions(mask));
}

void check_search_width(const char* op, const Permutation& p) {
    if (p.size() > kMaxSearchWidth)
        throw Error(std::string(op) + ": classes of more than 20 vertices are not supported");
}

std::vector<Edge> bundle_edges(const Permutation& x, const Permutation& y) {
    std::vector<Edge> out;
    out.reserve(x.size() * y.size());
    for (Vertex u : x)
        for (Vertex v : y)
            out.push_back(make_edge(u, v));
    return out;
}

bool two_block_position(const AbstractDrawing& d, const Permutation& ground, int ground_sign,
                        const Permutation& block, int block_sign) {
    CyclicOrder rho = signed_cycle({{ground_sign, ground}, {block_sign, block}});
    return is_rho_drawing(d, rho, bundle_edges(ground, block));
}

void require_side(const AbstractDrawing& d, const char* op, const char* label,
                  const Permutation& ground, int ground_sign, const Permutation& block) {
    if (!two_block_position(d, ground, ground_sign, block, +1))
        throw Error(std::string(op) + ": the " + label +
                    " side is not in one-page position over the ground block");
}

// Lazily evaluated colour table over index quadruples (i, i2, j, k) with
// i < i2 positions in A, j in B, k in C.
class ColourTable {
public:
    ColourTable(const AbstractDrawing& d, const Permutation& a, const Permutation& b,
                const Permutation& c, SearchBudget& budget)
        : d_(d), a_(a), b_(b), c_(c), budget_(budget),
          cache_(a.size() * a.size() * b.size() * c.size(), kUnset) {}

    QuadColour at(size_t i, size_t i2, size_t j, size_t k) {
        size_t key = ((i * a_.size() + i2) * b_.size() + j) * c_.size() + k;
        if (cache_[key] == kUnset) {
            budget_.spend(1);
            cache_[key] = char(colour_quad(d_, a_[i], a_[i2], b_[j], c_[k]));
        }
        return QuadColour(cache_[key]);
    }

private:
    static constexpr char kUnset = -1;

    const AbstractDrawing& d_;
    const Permutation& a_;
    const Permutation& b_;
    const Permutation& c_;
    SearchBudget& budget_;
    std::vector<char> cache_;
};

// Positions of the q lowest set bits, as a mask, when the set has at least
// q bits; 0 otherwise. The result is the colex-least q-subset of the set.
uint32_t lowest_bits(uint32_t set, int q) {
    uint32_t out = 0;
    int taken = 0;
    for (uint32_t rest = set; rest != 0 && taken < q; rest &= rest - 1, ++taken)
        out |= rest & (0u - rest);
    return taken == q ? out : 0u;
}

} // namespace

std::string to_string(QuadColour colour) {
    switch (colour) {
    case QuadColour::eta0: return "eta0";
    case QuadColour::eta1: return "eta1";
    case QuadColour::eta2: return "eta2";
    case QuadColour::eta3: return "eta3";
    case QuadColour::eta4: return "eta4";
    }
    throw Error("to_string: unknown quad colour");
}

QuadColour colour_quad(const AbstractDrawing& d, Vertex a, Vertex a2, Vertex b, Vertex c) {
    if (a == a2 || b == c || a == b || a == c || a2 == b || a2 == c)
        throw Error("colour_quad: the four vertices must be distinct");
    const Edge ab = make_edge(a, b);
    const Edge ac = make_edge(a, c);
    const Edge a2b = make_edge(a2, b);
    const Edge a2c = make_edge(a2, c);
    for (const Edge& e : {ab, ac, a2b, a2c})
        if (!d.has_edge(e))
            throw UnknownEdgeError("colour_quad: edge " + to_string(e) + " is not in the drawing");

    const std::pair<Edge, Edge> adjacent[] = {{ab, ac}, {ab, a2b}, {ac, a2c}, {a2b, a2c}};
    for (const auto& [e, f] : adjacent)
        if (d.crossing_between(e, f) != nullptr)
            throw SimplicityViolationError("colour_quad: adjacent edges " + to_string(e) +
                                           " and " + to_string(f) + " cross");

    const CrossingRecord* straight = d.crossing_between(ab, a2c);
    const CrossingRecord* swapped = d.crossing_between(ac, a2b);
    if (straight != nullptr && swapped != nullptr)
        throw SimplicityViolationError("colour_quad: both independent edge pairs of the quad cross");
    if (straight == nullptr && swapped == nullptr)
        return QuadColour::eta0;

    if (straight != nullptr) {
        if (straight->rotation == CyclicOrder({a, a2, b, c}))
            return QuadColour::eta2;
        if (straight->rotation == CyclicOrder({a, c, b, a2}))
            return QuadColour::eta3;
    } else {
        if (swapped->rotation == CyclicOrder({a, a2, c, b}))
            return QuadColour::eta1;
        if (swapped->rotation == CyclicOrder({a, b, c, a2}))
            return QuadColour::eta4;
    }
    throw Error("colour_quad: crossing rotation matches no pattern");
}

std::optional<PairwiseOnePageCertificate>
find_pairwise_onepage(const AbstractDrawing& d, int q, const ExtractOptions& opt) {
    const int m = int(d.classes.size());
    if (m < 1)
        throw Error("find_pairwise_onepage: the drawing has no classes");
    if (q < 1)
        throw Error("find_pairwise_onepage: the target size must be at least 1");
    for (const Permutation& cls : d.classes) {
        check_search_width("find_pairwise_onepage", cls);
        if (cls.size() < size_t(q))
            return std::nullopt;
    }

    SearchBudget budget{opt.budget};
    std::vector<Permutation> cur(d.classes.begin(), d.classes.end());
    SignFunction sig;
    sig.m = m;
    sig.values.assign(size_t(m), std::vector<int>(size_t(m), 0));

    std::unordered_map<uint64_t, bool> memo;
    auto in_position = [&](int i, int j, uint32_t am, uint32_t bm, int si, int sj) {
        uint64_t key = (uint64_t(i) << 59) | (uint64_t(j) << 54) | (uint64_t(am) << 24) |
                       (uint64_t(bm) << 4) | (uint64_t(si > 0) << 1) | uint64_t(sj > 0);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        budget.spend(1);
        bool ok = two_block_position(d, select_mask(cur[size_t(i)], am), si,
                                     select_mask(cur[size_t(j)], bm), sj);
        memo.emplace(key, ok);
        return ok;
    };

    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            // The memo keys subpermutations by position masks, so entries
            // from earlier pairs are stale once a class shrinks.
            memo.clear();
            const size_t ni = cur[size_t(i)].size();
            const size_t nj = cur[size_t(j)].size();
            const size_t goal = std::max(size_t(q), (std::min(ni, nj) + 1) / 2);
            bool found = false;
            for (uint32_t am = (1u << goal) - 1; !found && am < (1u << ni);
                 am = next_same_size(am)) {
                for (uint32_t bm = (1u << goal) - 1; !found && bm < (1u << nj);
                     bm = next_same_size(bm)) {
                    for (int si : {+1, -1}) {
                        if (found)
                            break;
                        for (int sj : {+1, -1}) {
                            if (!in_position(i, j, am, bm, si, sj))
                                continue;
                            cur[size_t(i)] = select_mask(cur[size_t(i)], am);
                            cur[size_t(j)] = select_mask(cur[size_t(j)], bm);
                            sig.values[size_t(j)][size_t(i)] = si;
                            sig.values[size_t(i)][size_t(j)] = sj;
                            found = true;
                            break;
                        }
                    }
                }
            }
            if (!found)
                return std::nullopt;
        }
    }

    for (Permutation& cls : cur)
        cls = prefix(cls, size_t(q));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!two_block_position(d, cur[size_t(i)], sig.values[size_t(j)][size_t(i)],
                                    cur[size_t(j)], sig.values[size_t(i)][size_t(j)]))
                return std::nullopt;
    return PairwiseOnePageCertificate{std::move(cur), std::move(sig)};
}

std::optional<OrderTwoResult>
order_two(const AbstractDrawing& d, const Permutation& A, const Permutation& B,
          const Permutation& C, int q, const ExtractOptions& opt) {
    require_side(d, "order_two", "first", A, +1, B);
    require_side(d, "order_two", "second", A, +1, C);
    if (q < 1)
        throw Error("order_two: the target size must be at least 1");
    check_search_width("order_two", A);
    check_search_width("order_two", B);
    check_search_width("order_two", C);
    if (size_t(q) > A.size() || size_t(q) > B.size() || size_t(q) > C.size())
        return std::nullopt;

    SearchBudget budget{opt.budget};
    ColourTable colours(d, A, B, C, budget);
    const size_t na = A.size(), nb = B.size(), nc = C.size();

    for (uint32_t am = (1u << q) - 1; am < (1u << na); am = next_same_size(am)) {
        const std::vector<size_t> ai = mask_positions(am);
        // uniform[j][k] holds the colour shared by all ground pairs of this
        // candidate, or kMixed.
        constexpr char kMixed = -2;
        std::vector<char> uniform(nb * nc, kMixed);
        for (size_t j = 0; j < nb; ++j) {
            for (size_t k = 0; k < nc; ++k) {
                // A single ground vertex leaves no quad to colour; such a
                // candidate merges trivially and is reported block-first.
                QuadColour first =
                    ai.size() >= 2 ? colours.at(ai[0], ai[1], j, k) : QuadColour::eta2;
                bool same = true;
                for (size_t x = 0; same && x + 1 < ai.size(); ++x)
                    for (size_t y = x + 1; same && y < ai.size(); ++y)
                        same = colours.at(ai[x], ai[y], j, k) == first;
                if (same)
                    uniform[j * nc + k] = char(first);
            }
        }

        for (uint32_t bm = (1u << q) - 1; bm < (1u << nb); bm = next_same_size(bm)) {
            budget.spend(1);
            uint32_t compat2 = 0, compat1 = 0;
            for (size_t k = 0; k < nc; ++k) {
                bool all2 = true, all1 = true;
                for (size_t j : mask_positions(bm)) {
                    char u = uniform[j * nc + k];
                    all2 = all2 && u == char(QuadColour::eta2);
                    all1 = all1 && u == char(QuadColour::eta1);
                }
                if (all2)
                    compat2 |= 1u << k;
                if (all1)
                    compat1 |= 1u << k;
            }

            const uint32_t cm2 = lowest_bits(compat2, q);
            const uint32_t cm1 = lowest_bits(compat1, q);
            std::vector<std::pair<uint32_t, MergeOrder>> candidates;
            if (cm2 != 0)
                candidates.emplace_back(cm2, MergeOrder::BC);
            if (cm1 != 0)
                candidates.emplace_back(cm1, MergeOrder::CB);
            std::sort(candidates.begin(), candidates.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });
            for (const auto& [cm, which] : candidates) {
                OrderTwoResult res{select_mask(A, am), select_mask(B, bm), select_mask(C, cm),
                                   which};
                const Permutation& second = which == MergeOrder::BC ? res.b : res.c;
                const Permutation& third = which == MergeOrder::BC ? res.c : res.b;
                CyclicOrder rho = signed_cycle({{+1, res.a}, {+1, second}, {+1, third}});
                std::vector<Edge> edges = bundle_edges(res.a, res.b);
                std::vector<Edge> more = bundle_edges(res.a, res.c);
                edges.insert(edges.end(), more.begin(), more.end());
                if (is_rho_drawing(d, rho, edges))
                    return res;
            }
        }
    }
    return std::nullopt;
}

std::optional<OrderClassesResult>
order_classes(const AbstractDrawing& d, const Permutation& A,
              const std::vector<Permutation>& blocks, int q, const ExtractOptions& opt) {
    for (const Permutation& b : blocks)
        require_side(d, "order_classes", "block", A, +1, b);
    if (q < 1)
        throw Error("order_classes: the target size must be at least 1");
    if (size_t(q) > A.size())
        return std::nullopt;
    for (const Permutation& b : blocks)
        if (size_t(q) > b.size())
            return std::nullopt;

    const size_t r = blocks.size();
    OrderClassesResult res;
    res.a = A;
    res.blocks = blocks;
    if (r == 0) {
        res.a = prefix(res.a, size_t(q));
        return res;
    }

    // before[x][y] records that block x precedes block y on the page.
    std::vector<std::vector<bool>> before(r, std::vector<bool>(r, false));
    for (size_t x = 0; x < r; ++x) {
        for (size_t y = x + 1; y < r; ++y) {
            auto two = order_two(d, res.a, res.blocks[x], res.blocks[y], q, opt);
            if (!two.has_value())
                return std::nullopt;
            res.a = two->a;
            res.blocks[x] = two->b;
            res.blocks[y] = two->c;
            before[x][y] = two->which == MergeOrder::BC;
            before[y][x] = !before[x][y];
        }
    }
    if (r == 1) {
        res.a = prefix(res.a, size_t(q));
        res.blocks[0] = prefix(res.blocks[0], size_t(q));
    }

    for (size_t x = 0; x < r; ++x)
        for (size_t y = 0; y < r; ++y)
            for (size_t z = 0; z < r; ++z)
                if (x != y && y != z && x != z && before[x][y] && before[y][z] &&
                    !before[x][z])
                    throw TransitivityViolationError(
                        "order_classes: blocks " + std::to_string(x + 1) + ", " +
                        std::to_string(y + 1) + ", " + std::to_string(z + 1) +
                        " are ordered in a cycle");

    res.order.resize(r);
    for (size_t x = 0; x < r; ++x)
        res.order[x] = int(x + 1);
    std::sort(res.order.begin(), res.order.end(),
              [&](int x, int y) { return before[size_t(x - 1)][size_t(y - 1)]; });

    std::vector<std::pair<int, Permutation>> parts{{+1, res.a}};
    std::vector<Edge> edges;
    for (int idx : res.order)
        parts.emplace_back(+1, res.blocks[size_t(idx - 1)]);
    for (const Permutation& b : res.blocks) {
        std::vector<Edge> more = bundle_edges(res.a, b);
        edges.insert(edges.end(), more.begin(), more.end());
    }
    if (!is_rho_drawing(d, signed_cycle(parts), edges))
        return std::nullopt;
    return res;
}

std::optional<SeparateSidesResult>
separate_sides(const AbstractDrawing& d, const Permutation& A, const Permutation& B,
               const Permutation& C, int q, const ExtractOptions& opt) {
    require_side(d, "separate_sides", "plus", A, +1, B);
    if (!two_block_position(d, A, -1, C, +1))
        throw Error("separate_sides: the minus side is not in one-page position over the "
                    "reversed ground block");
    if (q < 1)
        throw Error("separate_sides: the target size must be at least 1");
    check_search_width("separate_sides", A);
    check_search_width("separate_sides", B);
    check_search_width("separate_sides", C);
    if (size_t(q) > A.size() || size_t(q) > B.size() || size_t(q) > C.size())
        return std::nullopt;

    SearchBudget budget{opt.budget};
    ColourTable colours(d, A, B, C, budget);
    const size_t na = A.size(), nb = B.size(), nc = C.size();

    for (uint32_t am = (1u << q) - 1; am < (1u << na); am = next_same_size(am)) {
        const std::vector<size_t> ai = mask_positions(am);
        std::vector<bool> clear(nb * nc, false);
        for (size_t j = 0; j < nb; ++j) {
            for (size_t k = 0; k < nc; ++k) {
                bool ok = true;
                for (size_t x = 0; ok && x + 1 < ai.size(); ++x)
                    for (size_t y = x + 1; ok && y < ai.size(); ++y)
                        ok = colours.at(ai[x], ai[y], j, k) == QuadColour::eta0;
                clear[j * nc + k] = ok;
            }
        }
        for (uint32_t bm = (1u << q) - 1; bm < (1u << nb); bm = next_same_size(bm)) {
            budget.spend(1);
            uint32_t compat = 0;
            for (size_t k = 0; k < nc; ++k) {
                bool all = true;
                for (size_t j : mask_positions(bm))
                    all = all && clear[j * nc + k];
                if (all)
                    compat |= 1u << k;
            }
            const uint32_t cm = lowest_bits(compat, q);
            if (cm == 0)
                continue;
            SeparateSidesResult res{select_mask(A, am), select_mask(B, bm), select_mask(C, cm)};
            bool verified = true;
            for (const Edge& e : bundle_edges(res.a, res.b)) {
                for (const Edge& f : bundle_edges(res.a, res.c)) {
                    if (e == f)
                        continue;
                    if (d.crossing_between(e, f) != nullptr) {
                        verified = false;
                        break;
                    }
                }
                if (!verified)
                    break;
            }
            if (verified)
                return res;
        }
    }
    return std::nullopt;
}

namespace {

// Hands out the per-stage target sizes of the extraction pipeline:
// explicit schedule entries first, then halving clamped at the final
// size.
class StageSchedule {
public:
    StageSchedule(const std::vector<int>& given, int n) : given_(given), n_(n) {}

    int next(int current) {
        int target;
        if (used_ < given_.size()) {
            target = given_[used_++];
            if (target < n_)
                throw Error("extract_canonical: stage schedule entry " +
                            std::to_string(target) + " is below the target class size");
            if (target > current)
                throw Error("extract_canonical: stage schedule entry " +
                            std::to_string(target) + " exceeds the current class size " +
                            std::to_string(current));
        } else {
            target = std::max(n_, (current + 1) / 2);
        }
        realized_.push_back(target);
        return target;
    }

    const std::vector<int>& realized() const { return realized_; }

private:
    const std::vector<int>& given_;
    size_t used_ = 0;
    int n_ = 1;
    std::vector<int> realized_;
};

std::optional<ExtractionResult> finish_extraction(const AbstractDrawing& d,
                                                  std::vector<Permutation> classes,
                                                  Template tmpl,
                                                  std::vector<int> stage_sizes) {
    std::vector<Vertex> kept;
    for (const Permutation& cls : classes)
        for (Vertex v : cls)
            kept.push_back(v);
    AbstractDrawing sub = induce_vertices(d, kept);
    if (!verify_canonical(sub, classes, tmpl).empty())
        return std::nullopt;
    return ExtractionResult{std::move(classes), std::move(tmpl), std::move(stage_sizes)};
}

} // namespace

std::optional<ExtractionResult>
extract_canonical(const AbstractDrawing& d, int n, const ExtractOptions& opt) {
    const int m = int(d.classes.size());
    if (m < 1)
        throw Error("extract_canonical: the drawing has no classes");
    if (n < 1)
        throw Error("extract_canonical: the target size must be at least 1");
    const size_t full = d.classes.front().size();
    for (const Permutation& cls : d.classes)
        if (cls.size() != full)
            throw Error("extract_canonical: classes must have equal sizes");
    if (size_t(n) > full)
        return std::nullopt;

    if (n == 1) {
        // With one vertex per class every side condition is vacuous, so the
        // template is read straight from the rotations of the induced
        // subdrawing on the first vertex of each class.
        std::vector<Permutation> classes;
        std::vector<Vertex> kept;
        for (const Permutation& cls : d.classes) {
            classes.push_back(Permutation({cls[0]}));
            kept.push_back(cls[0]);
        }
        AbstractDrawing sub = induce_vertices(d, kept);
        std::optional<Template> tmpl = template_of(sub, classes);
        if (!tmpl.has_value())
            return std::nullopt;
        return finish_extraction(d, std::move(classes), std::move(*tmpl), {1});
    }

    if (m == 1) {
        Template tmpl;
        tmpl.m = 1;
        tmpl.classes.resize(1);
        return finish_extraction(d, {prefix(d.classes.front(), size_t(n))}, std::move(tmpl),
                                 {n});
    }

    StageSchedule schedule(opt.stage_sizes, n);
    int cur = schedule.next(int(full));
    auto cert = find_pairwise_onepage(d, cur, opt);
    if (!cert.has_value())
        return std::nullopt;
    std::vector<Permutation> cls = std::move(cert->classes);
    const SignFunction sig = std::move(cert->sign);

    auto side_ids = [&](int i, int sign) {
        std::vector<int> out;
        for (int j = 1; j <= m; ++j)
            if (j != i && sig.at(j, i) == sign)
                out.push_back(j);
        return out;
    };
    auto oriented = [&](int i, int j) {
        return sig.at(i, j) == +1 ? cls[size_t(j - 1)] : reverse(cls[size_t(j - 1)]);
    };
    auto unorient = [&](int i, int j, const Permutation& p) {
        return sig.at(i, j) == +1 ? p : reverse(p);
    };
    auto shrink_rest = [&](const std::vector<int>& touched, int target) {
        for (int k = 1; k <= m; ++k)
            if (std::find(touched.begin(), touched.end(), k) == touched.end())
                cls[size_t(k - 1)] = prefix(cls[size_t(k - 1)], size_t(target));
    };

    std::vector<std::vector<int>> plus_order(size_t(m) + 1), minus_order(size_t(m) + 1);

    for (int pass = 0; pass < 2; ++pass) {
        const int sign = pass == 0 ? +1 : -1;
        for (int i = 1; i <= m; ++i) {
            const std::vector<int> ids = side_ids(i, sign);
            const int target = schedule.next(cur);
            std::vector<Permutation> blocks;
            for (int j : ids)
                blocks.push_back(oriented(i, j));
            const Permutation ground =
                sign == +1 ? cls[size_t(i - 1)] : reverse(cls[size_t(i - 1)]);
            auto ordered = order_classes(d, ground, blocks, target, opt);
            if (!ordered.has_value())
                return std::nullopt;
            cls[size_t(i - 1)] = sign == +1 ? ordered->a : reverse(ordered->a);
            for (size_t idx = 0; idx < ids.size(); ++idx)
                cls[size_t(ids[idx] - 1)] = unorient(i, ids[idx], ordered->blocks[idx]);
            std::vector<int>& side = sign == +1 ? plus_order[size_t(i)] : minus_order[size_t(i)];
            side.clear();
            for (int b : ordered->order)
                side.push_back(ids[size_t(b - 1)]);
            std::vector<int> touched = ids;
            touched.push_back(i);
            shrink_rest(touched, target);
            cur = target;
        }
    }

    for (int i = 1; i <= m; ++i) {
        for (int j : side_ids(i, +1)) {
            for (int k : side_ids(i, -1)) {
                const int target = schedule.next(cur);
                auto split = separate_sides(d, cls[size_t(i - 1)], oriented(i, j),
                                            oriented(i, k), target, opt);
                if (!split.has_value())
                    return std::nullopt;
                cls[size_t(i - 1)] = split->a;
                cls[size_t(j - 1)] = unorient(i, j, split->b);
                cls[size_t(k - 1)] = unorient(i, k, split->c);
                shrink_rest({i, j, k}, target);
                cur = target;
            }
        }
    }

    for (Permutation& c : cls)
        c = prefix(c, size_t(n));
    Template tmpl;
    tmpl.m = m;
    tmpl.classes.resize(size_t(m));
    for (int i = 1; i <= m; ++i) {
        tmpl.classes[size_t(i - 1)].plus = plus_order[size_t(i)];
        tmpl.classes[size_t(i - 1)].minus = minus_order[size_t(i)];
    }
    return finish_extraction(d, std::move(cls), std::move(tmpl), schedule.realized());
}

} // namespace mpcross

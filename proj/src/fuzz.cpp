#include "orbcc/fuzz.hpp"

#include "orbcc/repmod.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace orbcc {

std::vector<std::set<EdgeKey>> brute_force_perfect_matchings(const GraphExport &g) {
    std::vector<std::set<EdgeKey>> out;
    std::vector<EdgeKey> keys;
    for (const auto &[k, e] : g.edges) {
        (void)e;
        keys.push_back(k);
    }
    std::vector<char> covered(g.vertex_count, 0);
    std::set<EdgeKey> cur;
    auto rec = [&](auto &&self) -> void {
        int v = -1;
        for (int i = 0; i < g.vertex_count; ++i)
            if (!covered[i]) {
                v = i;
                break;
            }
        if (v < 0) {
            out.push_back(cur);
            return;
        }
        for (const EdgeKey &k : keys) {
            auto [a, b] = g.edges.at(k);
            if (a != v && b != v)
                continue;
            if (covered[a] || covered[b])
                continue;
            covered[a] = covered[b] = 1;
            cur.insert(k);
            self(self);
            cur.erase(k);
            covered[a] = covered[b] = 0;
        }
    };
    rec(rec);
    return out;
}

std::vector<std::set<EdgeKey>> brute_force_good_matchings(const BandGraph &b) {
    GraphExport g = export_graph(b);
    auto all = brute_force_perfect_matchings(g);
    if (!g.cut_vertices)
        throw std::runtime_error("band export has no cut edge");
    auto [x, y] = *g.cut_vertices;
    const int d = b.snake.tiles();
    auto side_of = [&](const EdgeKey &k) {
        // 0 = first tile, 1 = last tile, -1 = neither
        const auto &s1 = g.tile_sides.at(1);
        const auto &sd = g.tile_sides.at(d);
        bool on1 = std::find(s1.begin(), s1.end(), k) != s1.end();
        bool ond = std::find(sd.begin(), sd.end(), k) != sd.end();
        if (on1 && !ond)
            return 0;
        if (ond && !on1)
            return 1;
        return -1;
    };
    std::vector<std::set<EdgeKey>> good;
    for (const auto &m : all) {
        if (m.count(cut_edge_key())) {
            good.push_back(m);
            continue;
        }
        int side_x = -2, side_y = -2;
        for (const EdgeKey &k : m) {
            auto [a, bb] = g.edges.at(k);
            if (a == x || bb == x)
                side_x = side_of(k);
            if (a == y || bb == y)
                side_y = side_of(k);
        }
        if (side_x >= 0 && side_x == side_y)
            good.push_back(m);
    }
    return good;
}

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    // avoid distribution objects: their output is implementation defined
    std::uint64_t below(std::uint64_t k) { return k ? eng() % k : 0; }
};

StringWord random_string(const GentlePair &g, Rng &rng, int max_len) {
    int v = 1 + (int)rng.below(g.quiver.n);
    StringWord w = StringWord::trivial(v);
    int target = (int)rng.below(max_len + 1);
    for (int i = 0; i < target; ++i) {
        auto exts = valid_extensions(g, w);
        if (exts.empty())
            break;
        Letter l = exts[rng.below(exts.size())];
        if (w.is_trivial())
            w = StringWord{0, {l}};
        else
            w.letters.push_back(l);
    }
    return w;
}

std::optional<BandWord> random_band(const GentlePair &g, Rng &rng, int max_len) {
    const Quiver &q = g.quiver;
    for (int attempt = 0; attempt < 60; ++attempt) {
        int target = 2 + (int)rng.below(std::max(1, max_len - 1));
        StringWord w = random_string(g, rng, target);
        if (w.is_trivial() || w.length() < 1)
            continue;
        // closing letter: valid against both ends, returning to the start
        int start = letter_source(q, w.letters.front());
        int end = letter_target(q, w.letters.back());
        std::vector<Letter> cands;
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            for (bool inv : {false, true}) {
                Letter l{(int)a, inv};
                if (letter_source(q, l) != end || letter_target(q, l) != start)
                    continue;
                if (!window_valid(g, w.letters.back(), l))
                    continue;
                if (!window_valid(g, l, w.letters.front()))
                    continue;
                cands.push_back(l);
            }
        }
        if (cands.empty())
            continue;
        BandWord band;
        band.letters = w.letters;
        band.letters.push_back(cands[rng.below(cands.size())]);
        if (!validate_band(g, band))
            return band;
    }
    return std::nullopt;
}

std::string ints(const std::vector<int> &v) { return format_int_vector(v); }

// covers of the height lattice: pairs differing in exactly one tile
template <typename Graph>
bool check_twist_parity(const Graph &graph, const FencePoset &poset, std::string &msg) {
    auto heights = enumerate_heights(poset);
    std::set<std::vector<int>> hset(heights.begin(), heights.end());
    GraphExport ex = export_graph(graph);
    const SnakeGraph *snake;
    if constexpr (std::is_same_v<Graph, BandGraph>)
        snake = &graph.snake;
    else
        snake = &graph;
    for (const auto &h : heights) {
        for (int t = 1; t <= poset.size; ++t) {
            if (h[t - 1] == 1)
                continue;
            std::vector<int> up = h;
            up[t - 1] = 1;
            if (!hset.count(up))
                continue;
            auto lowe = matching_edges(graph, h);
            auto highe = matching_edges(graph, up);
            std::set<EdgeKey> removed;
            for (const EdgeKey &k : lowe)
                if (!highe.count(k))
                    removed.insert(k);
            const auto &sides = ex.tile_sides.at(t);
            std::set<EdgeKey> horizontal{sides[0], sides[2]}; // N, S
            std::set<EdgeKey> vertical{sides[1], sides[3]};   // E, W
            bool replaced_horizontal = removed == horizontal;
            bool replaced_vertical = removed == vertical;
            if (!replaced_horizontal && !replaced_vertical) {
                msg = "twist at tile " + std::to_string(t) + " from " + ints(h) +
                      " is not an edge-pair swap";
                return false;
            }
            bool expect_horizontal = snake->rel(t) == 1;
            if (replaced_horizontal != expect_horizontal) {
                msg = "twist parity violated at tile " + std::to_string(t) + " from " + ints(h);
                return false;
            }
        }
    }
    return true;
}

struct CaseChecker {
    const GentlePair &g;
    std::optional<LabelContext> labels;
    FuzzSummary &summary;
    std::string repro;

    void fail(const std::string &what) { summary.failures.push_back(what + "  [" + repro + "]"); }

    bool positive_at_y1(const LaurentPolynomial &p) {
        auto s = p.specialize_y_to_one();
        for (const auto &[e, c] : s.terms()) {
            (void)e;
            if (c <= 0)
                return false;
        }
        return !s.is_zero();
    }

    void check_string(const StringWord &w) {
        const Quiver &q = g.quiver;
        SnakeGraph graph = build_snake_graph(q, w);
        FencePoset poset = fence_poset(graph);
        auto heights = enumerate_heights(poset);

        // (a) matchings against the brute-force matcher
        auto brute = brute_force_perfect_matchings(export_graph(graph));
        if (brute.size() != heights.size())
            fail("matching count " + std::to_string(heights.size()) + " != brute force " +
                 std::to_string(brute.size()));
        std::set<std::set<EdgeKey>> mats;
        for (const auto &h : heights)
            mats.insert(matching_edges(graph, h));
        for (const auto &m : brute)
            if (!mats.count(m))
                fail("brute-force matching missing from enumeration");

        // (b) chi table vs coordinate-subspace count
        auto table = euler_char_table(q, w);
        auto bf = brute_force_submodules(g, string_representation(g, w));
        if (table != bf)
            fail("chi table disagrees with brute-force submodules");

        // (c) cc vs expansion
        auto ver = verify_cc_equals_expansion(g, w, labels);
        if (!ver.ok)
            fail("cc != expansion:\n" + ver.diff);

        // (d) per-matching weight identity
        if (labels) {
            auto gv = g_vector_string(g, w);
            EdgeLabeling lab = label_edges(*labels->tri, g, *labels->arrow_triangle, w, graph);
            auto cross = crossing_monomial(word_positions(q, w), q.n);
            IntMatrix c = c_matrix(q);
            for (const auto &h : heights) {
                auto wt = matching_weight(*labels->tri, lab, matching_edges(graph, h), q.n);
                auto lhs = wt - cross;
                auto arc = height_to_arc_vector(graph, h, q.n);
                auto ce = matrix_apply(c, arc);
                for (int i = 0; i < q.n; ++i)
                    if (lhs.x[i] != gv.g[i] + ce[i]) {
                        fail("matching weight identity fails at height " + ints(h));
                        break;
                    }
            }
            if (!minimal_term_check(g, w, *labels))
                fail("minimal term check failed");
        }

        // (e) AR translate vs homological translate
        if (!is_projective(g, w)) {
            StringWord ar = ar_translate(g, w);
            TauResult tau = tau_homological(g, w);
            if (dimension_vector(q, ar) != tau.dim)
                fail("ar_translate dimension " + ints(dimension_vector(q, ar)) +
                     " != tau " + ints(tau.dim));
            else if (!(canonical_string_form(q, ar) == tau.word))
                fail("ar_translate word differs from homological translate");
        }

        // structural invariants
        if (heights.front() != std::vector<int>(graph.tiles(), 0) ||
            heights.back() != std::vector<int>(graph.tiles(), 1))
            fail("minimal/maximal heights are not all-zero/all-one");
        std::string msg;
        if (!check_twist_parity(graph, poset, msg))
            fail(msg);
        auto cc = cc_prin(g, w);
        auto gv = g_vector_string(g, w);
        auto y0 = cc.y_degree_zero_part();
        ExponentVector xg(q.n);
        xg.x.assign(gv.g.begin(), gv.g.end());
        if (y0.term_count() != 1 || y0.coeff(xg) != 1)
            fail("y-degree-0 term is not x^g");
        if (!positive_at_y1(cc))
            fail("coefficient-free specialization not positive");
    }

    void check_band(const BandWord &w) {
        const Quiver &q = g.quiver;
        BandBuild bb = build_band_graph(g, w);
        FencePoset poset = fence_poset(bb.graph);
        auto heights = enumerate_heights(poset);

        auto brute = brute_force_good_matchings(bb.graph);
        if (brute.size() != heights.size())
            fail("good matching count " + std::to_string(heights.size()) +
                 " != brute force " + std::to_string(brute.size()));
        std::set<std::set<EdgeKey>> mats;
        for (const auto &h : heights)
            mats.insert(matching_edges(bb.graph, h));
        for (const auto &m : brute)
            if (!mats.count(m))
                fail("brute-force good matching missing from enumeration");

        auto table = euler_char_table(q, w);
        for (long long lambda : {1, 2}) {
            auto bf = brute_force_submodules(g, band_representation(g, w, Rat(lambda)));
            if (table != bf)
                fail("chi table disagrees with brute force at lambda=" + std::to_string(lambda));
        }

        auto ver = verify_cc_equals_expansion(g, w, labels);
        if (!ver.ok)
            fail("cc != expansion (band):\n" + ver.diff);

        if (labels) {
            auto gv = g_vector_band(g, w);
            EdgeLabeling lab =
                label_edges_band(*labels->tri, g, *labels->arrow_triangle, bb.rotated, bb.graph);
            auto cross = crossing_monomial(band_positions(q, bb.rotated), q.n);
            IntMatrix c = c_matrix(q);
            for (const auto &h : heights) {
                auto wt = matching_weight(*labels->tri, lab, matching_edges(bb.graph, h), q.n);
                auto lhs = wt - cross;
                auto arc = height_to_arc_vector(bb.graph.snake, h, q.n);
                auto ce = matrix_apply(c, arc);
                for (int i = 0; i < q.n; ++i)
                    if (lhs.x[i] != gv.g[i] + ce[i]) {
                        fail("band matching weight identity fails at height " + ints(h));
                        break;
                    }
            }
            if (!minimal_term_check(g, w, *labels))
                fail("band minimal term check failed");
        }

        if (heights.front() != std::vector<int>(poset.size, 0) ||
            heights.back() != std::vector<int>(poset.size, 1))
            fail("band minimal/maximal heights are not all-zero/all-one");
        std::string msg;
        if (!check_twist_parity(bb.graph, poset, msg))
            fail(msg);
        auto cc = cc_prin(g, w);
        auto gv = g_vector_band(g, w);
        auto y0 = cc.y_degree_zero_part();
        ExponentVector xg(q.n);
        xg.x.assign(gv.g.begin(), gv.g.end());
        if (y0.term_count() != 1 || y0.coeff(xg) != 1)
            fail("band y-degree-0 term is not x^g");
        if (!positive_at_y1(cc))
            fail("band coefficient-free specialization not positive");
    }
};

} // namespace

FuzzSummary fuzz_pair(const GentlePair &g, std::optional<LabelContext> labels,
                      const FuzzOptions &opt) {
    FuzzSummary summary;
    Rng rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
        bool want_band = rng.below(3) == 0;
        CaseChecker checker{g, labels, summary, ""};
        if (want_band) {
            auto band = random_band(g, rng, opt.max_len);
            if (band) {
                checker.repro = "case " + std::to_string(i) + " band " +
                                format_band(g.quiver, *band) + " seed " +
                                std::to_string(opt.seed);
                summary.bands++;
                summary.cases++;
                checker.check_band(*band);
                continue;
            }
        }
        StringWord w = random_string(g, rng, opt.max_len);
        checker.repro = "case " + std::to_string(i) + " string " + format_word(g.quiver, w) +
                        " seed " + std::to_string(opt.seed);
        summary.strings++;
        summary.cases++;
        checker.check_string(w);
    }
    return summary;
}

} // namespace orbcc

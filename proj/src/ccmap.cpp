#include "orbcc/ccmap.hpp"

#include <sstream>
#include <stdexcept>

namespace orbcc {

namespace {

// In a trivial string both extendability tests see the same arrows; each
// distinct arrow into the vertex contributes once.
std::vector<int> r_vector_trivial(const GentlePair &gp, int v) {
    std::vector<int> r(gp.quiver.n, 0);
    for (int a : gp.quiver.arrows_into(v))
        r[gp.quiver.arrows[a].source - 1] += 1;
    return r;
}

} // namespace

GVector g_vector_string(const GentlePair &gp, const StringWord &w) {
    if (auto err = validate_string(gp, w))
        throw std::runtime_error("g_vector_string: " + *err);
    const Quiver &q = gp.quiver;
    GVector out;
    out.a.assign(q.n, 0);
    out.b.assign(q.n, 0);
    out.r.assign(q.n, 0);
    auto cls = classify_positions(gp, w);
    if (w.is_trivial()) {
        out.a[w.trivial_vertex - 1] = 1;
        out.r = r_vector_trivial(gp, w.trivial_vertex);
    } else {
        for (const auto &p : cls.positions) {
            if (p.deep)
                out.a[p.vertex - 1] += 1;
            if (p.peak && p.strict)
                out.b[p.vertex - 1] += 1;
        }
        // correction per word end: the unique arrow extending past a non-peak
        if (!cls.starts_on_peak) {
            for (int a : q.arrows_into(letter_source(q, w.letters.front()))) {
                StringWord ext;
                ext.letters.push_back(Letter{a, false});
                ext.letters.insert(ext.letters.end(), w.letters.begin(), w.letters.end());
                if (!validate_string(gp, ext)) {
                    out.r[q.arrows[a].source - 1] += 1;
                    break;
                }
            }
        }
        if (!cls.ends_on_peak) {
            for (int a : q.arrows_into(letter_target(q, w.letters.back()))) {
                StringWord ext = w;
                ext.letters.push_back(Letter{a, true});
                if (!validate_string(gp, ext)) {
                    out.r[q.arrows[a].source - 1] += 1;
                    break;
                }
            }
        }
    }
    out.g.assign(q.n, 0);
    for (int i = 0; i < q.n; ++i)
        out.g[i] = -out.a[i] + out.b[i] + out.r[i];
    return out;
}

GVector g_vector_band(const GentlePair &gp, const BandWord &w) {
    if (auto err = validate_band(gp, w))
        throw std::runtime_error("g_vector_band: " + *err);
    const Quiver &q = gp.quiver;
    GVector out;
    out.a.assign(q.n, 0);
    out.b.assign(q.n, 0);
    out.r.assign(q.n, 0);
    for (const auto &p : classify_band_positions(gp, w)) {
        if (p.deep)
            out.a[p.vertex - 1] += 1;
        if (p.peak)
            out.b[p.vertex - 1] += 1;
    }
    out.g.assign(q.n, 0);
    for (int i = 0; i < q.n; ++i)
        out.g[i] = -out.a[i] + out.b[i];
    return out;
}

namespace {

LaurentPolynomial assemble(const Quiver &q, const std::vector<int> &gvec,
                           const std::map<std::vector<int>, long long> &table) {
    const int n = q.n;
    IntMatrix c = c_matrix(q);
    LaurentPolynomial p(n);
    for (const auto &[e, count] : table) {
        ExponentVector exps(n);
        auto ce = matrix_apply(c, e);
        for (int i = 0; i < n; ++i) {
            exps.x[i] = gvec[i] + (int)ce[i];
            exps.y[i] = e[i];
        }
        p.add_term(exps, Coeff(count));
    }
    return p;
}

std::map<std::vector<int>, long long> matching_histogram(const SnakeGraph &graph,
                                                         const FencePoset &poset, int n) {
    std::map<std::vector<int>, long long> hist;
    for (const auto &h : enumerate_heights(poset))
        hist[height_to_arc_vector(graph, h, n)]++;
    return hist;
}

} // namespace

LaurentPolynomial cc_prin(const GentlePair &gp, const StringWord &w) {
    return assemble(gp.quiver, g_vector_string(gp, w).g, euler_char_table(gp.quiver, w));
}

LaurentPolynomial cc_prin(const GentlePair &gp, const BandWord &w) {
    return assemble(gp.quiver, g_vector_band(gp, w).g, euler_char_table(gp.quiver, w));
}

namespace {

LaurentPolynomial label_route(const GentlePair &gp, const std::vector<int> &gvec,
                              const SnakeGraph &graph, const FencePoset &poset,
                              const std::optional<BandGraph> &band,
                              const EdgeLabeling &labeling, const TriangulationData &tri,
                              const std::vector<int> &positions) {
    const int n = gp.quiver.n;
    (void)gvec;
    ExponentVector cross = crossing_monomial(positions, n);
    LaurentPolynomial p(n);
    for (const auto &h : enumerate_heights(poset)) {
        std::set<EdgeKey> edges =
            band ? matching_edges(*band, h) : matching_edges(graph, h);
        ExponentVector wt = matching_weight(tri, labeling, edges, n);
        ExponentVector exps = wt - cross;
        auto arc = height_to_arc_vector(graph, h, n);
        for (int i = 0; i < n; ++i)
            exps.y[i] = arc[i];
        p.add_term(exps, Coeff(1));
    }
    return p;
}

} // namespace

LaurentPolynomial snake_expansion(const GentlePair &gp, const StringWord &w,
                                  std::optional<LabelContext> labels) {
    if (auto err = validate_string(gp, w))
        throw std::runtime_error("snake_expansion: " + *err);
    const Quiver &q = gp.quiver;
    SnakeGraph graph = build_snake_graph(q, w);
    FencePoset poset = fence_poset(graph);
    auto gv = g_vector_string(gp, w);
    if (!labels)
        return assemble(q, gv.g, matching_histogram(graph, poset, q.n));
    EdgeLabeling lab = label_edges(*labels->tri, gp, *labels->arrow_triangle, w, graph);
    return label_route(gp, gv.g, graph, poset, std::nullopt, lab, *labels->tri,
                       word_positions(q, w));
}

LaurentPolynomial snake_expansion(const GentlePair &gp, const BandWord &w,
                                  std::optional<LabelContext> labels) {
    if (auto err = validate_band(gp, w))
        throw std::runtime_error("snake_expansion: " + *err);
    const Quiver &q = gp.quiver;
    BandBuild bb = build_band_graph(gp, w);
    FencePoset poset = fence_poset(bb.graph);
    auto gv = g_vector_band(gp, w);
    if (!labels)
        return assemble(q, gv.g, matching_histogram(bb.graph.snake, poset, q.n));
    EdgeLabeling lab =
        label_edges_band(*labels->tri, gp, *labels->arrow_triangle, bb.rotated, bb.graph);
    return label_route(gp, gv.g, bb.graph.snake, poset, bb.graph, lab, *labels->tri,
                       band_positions(q, bb.rotated));
}

bool minimal_term_check(const GentlePair &gp, const StringWord &w, const LabelContext &labels) {
    const Quiver &q = gp.quiver;
    SnakeGraph graph = build_snake_graph(q, w);
    EdgeLabeling lab = label_edges(*labels.tri, gp, *labels.arrow_triangle, w, graph);
    ExponentVector wt =
        matching_weight(*labels.tri, lab, minimal_matching_edges(graph), q.n);
    ExponentVector cross = crossing_monomial(word_positions(q, w), q.n);
    auto gv = g_vector_string(gp, w);
    ExponentVector lhs = wt - cross;
    for (int i = 0; i < q.n; ++i)
        if (lhs.x[i] != gv.g[i])
            return false;
    return true;
}

bool minimal_term_check(const GentlePair &gp, const BandWord &w, const LabelContext &labels) {
    const Quiver &q = gp.quiver;
    BandBuild bb = build_band_graph(gp, w);
    EdgeLabeling lab =
        label_edges_band(*labels.tri, gp, *labels.arrow_triangle, bb.rotated, bb.graph);
    std::vector<int> zero(bb.graph.snake.tiles(), 0);
    ExponentVector wt =
        matching_weight(*labels.tri, lab, matching_edges(bb.graph, zero), q.n);
    ExponentVector cross = crossing_monomial(band_positions(q, bb.rotated), q.n);
    auto gv = g_vector_band(gp, w);
    ExponentVector lhs = wt - cross;
    for (int i = 0; i < q.n; ++i)
        if (lhs.x[i] != gv.g[i])
            return false;
    return true;
}

std::string polynomial_diff(const LaurentPolynomial &a, const LaurentPolynomial &b,
                            const std::string &name_a, const std::string &name_b) {
    std::ostringstream os;
    for (const auto &[e, c] : a.terms()) {
        Coeff cb = b.coeff(e);
        if (cb == 0)
            os << "only in " << name_a << ": " << LaurentPolynomial::monomial(c, e).canonical_text()
               << "\n";
        else if (cb != c)
            os << "coefficient differs at " << LaurentPolynomial::monomial(1, e).canonical_text()
               << ": " << name_a << "=" << c << " " << name_b << "=" << cb << "\n";
    }
    for (const auto &[e, c] : b.terms())
        if (a.coeff(e) == 0)
            os << "only in " << name_b << ": " << LaurentPolynomial::monomial(c, e).canonical_text()
               << "\n";
    return os.str();
}

namespace {

template <typename Word>
VerifyResult verify_impl(const GentlePair &gp, const Word &w,
                         std::optional<LabelContext> labels) {
    VerifyResult r;
    LaurentPolynomial cc = cc_prin(gp, w);
    LaurentPolynomial height = snake_expansion(gp, w);
    std::ostringstream diff;
    if (cc != height) {
        r.ok = false;
        diff << polynomial_diff(cc, height, "cc", "expansion");
    }
    if (labels) {
        LaurentPolynomial lab = snake_expansion(gp, w, labels);
        if (cc != lab) {
            r.ok = false;
            diff << polynomial_diff(cc, lab, "cc", "label-expansion");
        }
    }
    r.diff = diff.str();
    return r;
}

} // namespace

VerifyResult verify_cc_equals_expansion(const GentlePair &gp, const StringWord &w,
                                        std::optional<LabelContext> labels) {
    return verify_impl(gp, w, labels);
}

VerifyResult verify_cc_equals_expansion(const GentlePair &gp, const BandWord &w,
                                        std::optional<LabelContext> labels) {
    return verify_impl(gp, w, labels);
}

} // namespace orbcc

#include "orbcc/orbifold.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orbcc {

int TriangulationData::arc_vertex(const std::string &id) const {
    for (int i = 0; i < n(); ++i)
        if (arc_ids[i] == id)
            return i + 1;
    return 0;
}

bool TriangulationData::is_boundary(const std::string &id) const {
    return std::find(boundary_ids.begin(), boundary_ids.end(), id) != boundary_ids.end();
}

std::vector<int> TriangulationData::triangles_of_arc(int v) const {
    std::vector<int> out;
    const std::string &id = arc_ids[v - 1];
    for (std::size_t t = 0; t < triangles.size(); ++t)
        for (const auto &e : triangles[t])
            if (e == id) {
                out.push_back(static_cast<int>(t));
                break;
            }
    return out;
}

std::string TriangulationData::ccw_neighbor(int triangle, const std::string &edge) const {
    const auto &tr = triangles[triangle];
    for (int i = 0; i < 3; ++i)
        if (tr[i] == edge)
            return tr[(i + 1) % 3];
    throw std::runtime_error("edge " + edge + " not in triangle");
}

std::string TriangulationData::cw_neighbor(int triangle, const std::string &edge) const {
    const auto &tr = triangles[triangle];
    for (int i = 0; i < 3; ++i)
        if (tr[i] == edge)
            return tr[(i + 2) % 3];
    throw std::runtime_error("edge " + edge + " not in triangle");
}

std::string TriangulationData::third_edge(int triangle, const std::string &a,
                                          const std::string &b) const {
    const auto &tr = triangles[triangle];
    for (int i = 0; i < 3; ++i)
        if (tr[i] != a && tr[i] != b)
            return tr[i];
    throw std::runtime_error("triangle has no third edge distinct from " + a + "," + b);
}

ValidationReport validate(const TriangulationData &t) {
    ValidationReport r;
    auto fail = [&](const std::string &m) {
        r.ok = false;
        r.violations.push_back(m);
    };
    std::map<std::string, int> slots;
    for (std::size_t ti = 0; ti < t.triangles.size(); ++ti) {
        const auto &tr = t.triangles[ti];
        int pend = 0;
        for (int i = 0; i < 3; ++i) {
            const std::string &e = tr[i];
            int v = t.arc_vertex(e);
            bool boundary = t.is_boundary(e);
            if (!v && !boundary)
                fail("triangle " + std::to_string(ti + 1) + ": unknown edge id " + e);
            if (v && t.arc_pending[v - 1])
                ++pend;
            slots[e]++;
            for (int j = i + 1; j < 3; ++j)
                if (tr[j] == e)
                    fail("triangle " + std::to_string(ti + 1) + " repeats edge id " + e);
        }
        if (pend == 3)
            fail("triangle " + std::to_string(ti + 1) + " has three pending edges");
        r.triangle_types.push_back(pend);
    }
    for (int v = 1; v <= t.n(); ++v) {
        int expect = t.arc_pending[v - 1] ? 1 : 2;
        int got = slots.count(t.arc_ids[v - 1]) ? slots[t.arc_ids[v - 1]] : 0;
        if (got != expect)
            fail("arc " + t.arc_ids[v - 1] + " occurs in " + std::to_string(got) +
                 " triangle slots, expected " + std::to_string(expect));
    }
    for (const auto &b : t.boundary_ids) {
        int got = slots.count(b) ? slots[b] : 0;
        if (got != 1)
            fail("boundary edge " + b + " occurs in " + std::to_string(got) +
                 " triangle slots, expected 1");
    }
    std::map<std::string, int> ids;
    for (const auto &a : t.arc_ids)
        ids[a]++;
    for (const auto &b : t.boundary_ids)
        ids[b]++;
    for (const auto &[id, c] : ids)
        if (c > 1)
            fail("edge id " + id + " declared more than once");
    return r;
}

GentleFromTriangulation build_gentle_pair(const TriangulationData &t) {
    auto rep = validate(t);
    if (!rep.ok) {
        std::string msg = "invalid triangulation:";
        for (const auto &v : rep.violations)
            msg += "\n  " + v;
        throw std::runtime_error(msg);
    }
    GentleFromTriangulation out;
    Quiver &q = out.pair.quiver;
    q.n = t.n();
    std::map<std::pair<int, int>, int> occurrence;
    // One arrow i -> j per triangle and ccw-consecutive interior pair (i, j);
    // remember the arrows of each triangle for its relations.
    std::vector<std::vector<int>> triangle_arrows(t.triangles.size());
    for (std::size_t ti = 0; ti < t.triangles.size(); ++ti) {
        const auto &tr = t.triangles[ti];
        for (int i = 0; i < 3; ++i) {
            int s = t.arc_vertex(tr[i]);
            int d = t.arc_vertex(tr[(i + 1) % 3]);
            if (!s || !d)
                continue;
            int k = occurrence[{s, d}]++;
            std::string id = std::to_string(s) + ">" + std::to_string(d) + ":" +
                             std::to_string(k);
            q.add_arrow(id, s, d);
            int idx = (int)q.arrows.size() - 1;
            triangle_arrows[ti].push_back(idx);
            out.arrow_triangle[idx] = (int)ti;
        }
    }
    for (int v = 1; v <= t.n(); ++v) {
        if (!t.arc_pending[v - 1])
            continue;
        q.add_arrow("loop:" + std::to_string(v), v, v);
        int idx = (int)q.arrows.size() - 1;
        out.arrow_triangle[idx] = t.triangles_of_arc(v).at(0);
    }
    // Relations: composable pairs of arrows inside one triangle, plus loop^2.
    for (const auto &arrows : triangle_arrows)
        for (int a : arrows)
            for (int b : arrows)
                if (q.arrows[a].target == q.arrows[b].source)
                    out.pair.relations.insert({a, b});
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        if (q.arrows[i].source == q.arrows[i].target)
            out.pair.relations.insert({(int)i, (int)i});
    out.pair.check();
    return out;
}

GeneralizedClusterQuiver build_generalized_quiver(const TriangulationData &t) {
    auto built = build_gentle_pair(t);
    GeneralizedClusterQuiver g;
    g.quiver.n = built.pair.quiver.n;
    for (const auto &a : built.pair.quiver.arrows)
        if (a.source != a.target)
            g.quiver.arrows.push_back(a);
    for (int v = 1; v <= t.n(); ++v)
        if (t.arc_pending[v - 1])
            g.pending.insert(v);
    g.check();
    return g;
}

StringWord string_from_crossings(const TriangulationData &t, const GentlePair &g,
                                 const std::map<int, int> &arrow_triangle,
                                 const std::vector<CrossingStep> &crossings) {
    if (crossings.empty())
        throw std::runtime_error("crossings: empty sequence");
    std::vector<int> verts;
    for (const auto &c : crossings) {
        int v = t.arc_vertex(c.arc);
        if (!v)
            throw std::runtime_error("crossings: unknown interior arc " + c.arc);
        verts.push_back(v);
    }
    if (crossings.size() == 1)
        return StringWord::trivial(verts[0]);

    StringWord w;
    for (std::size_t i = 0; i + 1 < crossings.size(); ++i) {
        int a = verts[i], b = verts[i + 1];
        if (a == b) {
            if (!t.arc_pending[a - 1])
                throw std::runtime_error("crossings: repeated arc " + crossings[i].arc +
                                         " is not pending");
            const auto &step = crossings[i + 1];
            if (!step.side)
                throw std::runtime_error("crossings: repeated pending arc " +
                                         crossings[i].arc + " needs a side flag (l or r)");
            int loop = g.quiver.arrow_index("loop:" + std::to_string(a));
            if (loop < 0)
                throw std::runtime_error("crossings: no loop arrow at vertex " +
                                         std::to_string(a));
            // marked point to the right of the curve <=> direct loop letter
            w.letters.push_back(Letter{loop, *step.side == 'l'});
            continue;
        }
        // Shared triangles of the two distinct arcs.
        std::vector<int> shared;
        for (int ti : t.triangles_of_arc(a)) {
            auto tb = t.triangles_of_arc(b);
            if (std::find(tb.begin(), tb.end(), ti) != tb.end())
                shared.push_back(ti);
        }
        if (shared.empty())
            throw std::runtime_error("crossings: arcs " + crossings[i].arc + " and " +
                                     crossings[i + 1].arc + " do not share a triangle");
        int chosen = -1;
        if (shared.size() > 1) {
            if (!crossings[i + 1].arrow_hint)
                throw std::runtime_error("crossings: arcs " + crossings[i].arc + " and " +
                                         crossings[i + 1].arc +
                                         " share two triangles; an arrow hint is required");
            int hint = g.quiver.arrow_index(*crossings[i + 1].arrow_hint);
            if (hint < 0)
                throw std::runtime_error("crossings: unknown arrow hint");
            auto it = arrow_triangle.find(hint);
            if (it == arrow_triangle.end())
                throw std::runtime_error("crossings: arrow hint has no triangle provenance");
            chosen = it->second;
        } else {
            chosen = shared[0];
        }
        // Counterclockwise succession picks the direct letter.
        const std::string &ida = t.arc_ids[a - 1];
        const std::string &idb = t.arc_ids[b - 1];
        bool ccw = t.ccw_neighbor(chosen, ida) == idb;
        bool cw = t.cw_neighbor(chosen, ida) == idb;
        if (!ccw && !cw)
            throw std::runtime_error("crossings: arcs not adjacent in the chosen triangle");
        int arrow = -1;
        for (const auto &[idx, ti] : arrow_triangle) {
            if (ti != chosen)
                continue;
            const Arrow &ar = g.quiver.arrows[idx];
            if (ccw && ar.source == a && ar.target == b)
                arrow = idx;
            if (!ccw && ar.source == b && ar.target == a)
                arrow = idx;
        }
        if (arrow < 0)
            throw std::runtime_error("crossings: no quiver arrow between " +
                                     crossings[i].arc + " and " + crossings[i + 1].arc);
        w.letters.push_back(Letter{arrow, !ccw});
    }
    if (auto err = validate_string(g, w))
        throw std::runtime_error("crossings: resulting word is not a string: " + *err);
    return w;
}

namespace {

std::vector<std::string> split_ws(const std::string &line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

TriangulationData parse_orbifold_text(const std::string &text) {
    TriangulationData t;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty())
            continue;
        auto err = [&](const std::string &m) {
            throw OrbifoldParseError("line " + std::to_string(lineno) + ": " + m);
        };
        if (toks[0] == "orbifold") {
            if (toks.size() != 2)
                err("expected: orbifold <name>");
            if (have_header)
                err("duplicate orbifold header");
            t.name = toks[1];
            have_header = true;
        } else if (toks[0] == "arc") {
            if (toks.size() < 2 || toks.size() > 3 || (toks.size() == 3 && toks[2] != "pending"))
                err("expected: arc <id> [pending]");
            t.arc_ids.push_back(toks[1]);
            t.arc_pending.push_back(toks.size() == 3);
        } else if (toks[0] == "boundary") {
            if (toks.size() != 2)
                err("expected: boundary <id>");
            t.boundary_ids.push_back(toks[1]);
        } else if (toks[0] == "triangle") {
            if (toks.size() != 4)
                err("expected: triangle <e1> <e2> <e3>");
            t.triangles.push_back({toks[1], toks[2], toks[3]});
        } else {
            err("unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_header)
        throw OrbifoldParseError("missing 'orbifold <name>' header");
    return t;
}

TriangulationData parse_orbifold_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw OrbifoldParseError("cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_orbifold_text(buf.str());
}

} // namespace orbcc

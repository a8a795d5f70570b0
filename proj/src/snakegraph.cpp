#include "orbcc/snakegraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbcc {

TileSide opposite(TileSide s) {
    switch (s) {
    case TileSide::N: return TileSide::S;
    case TileSide::S: return TileSide::N;
    case TileSide::E: return TileSide::W;
    case TileSide::W: return TileSide::E;
    }
    return TileSide::N;
}

std::string side_name(TileSide s) {
    switch (s) {
    case TileSide::N: return "N";
    case TileSide::E: return "E";
    case TileSide::S: return "S";
    case TileSide::W: return "W";
    }
    return "?";
}

TileSide BandGraph::first_glue_side() const {
    return (glue == BandGlue::WestEast || glue == BandGlue::WestNorth) ? TileSide::W
                                                                       : TileSide::S;
}

TileSide BandGraph::last_glue_side() const {
    return (glue == BandGlue::WestEast || glue == BandGlue::SouthEast) ? TileSide::E
                                                                       : TileSide::N;
}

SnakeGraph build_snake_graph(const Quiver &q, const StringWord &w) {
    SnakeGraph g;
    g.labels = word_positions(q, w);
    const int m = w.length();
    if (m == 0)
        return g;
    g.dirs.resize(m);
    g.dirs[0] = w.letters[0].inverse ? Dir::East : Dir::North;
    for (int i = 1; i < m; ++i) {
        bool same_sign = w.letters[i - 1].inverse == w.letters[i].inverse;
        // consecutive equal signs produce a zig-zag (shared vertex): flip
        g.dirs[i] = same_sign ? (g.dirs[i - 1] == Dir::North ? Dir::East : Dir::North)
                              : g.dirs[i - 1];
    }
    return g;
}

BandGraph make_band_graph(SnakeGraph snake, BandGlue glue) {
    BandGraph b;
    b.snake = std::move(snake);
    b.glue = glue;
    return b;
}

BandBuild build_band_graph(const GentlePair &g, const BandWord &w) {
    if (auto err = validate_band(g, w))
        throw std::runtime_error("build_band_graph: " + *err);
    const Quiver &q = g.quiver;
    const int m = w.length();
    int rot = -1;
    for (int s = 0; s < m; ++s) {
        const Letter &last = w.letters[(s + m - 1) % m];
        const Arrow &a = q.arrows[last.arrow];
        if (a.source != a.target) {
            rot = s;
            break;
        }
    }
    if (rot < 0)
        throw std::runtime_error("build_band_graph: all letters are loops");
    BandBuild out;
    out.rotation = rot;
    for (int i = 0; i < m; ++i)
        out.rotated.letters.push_back(w.letters[(rot + i) % m]);

    StringWord prefix;
    prefix.letters.assign(out.rotated.letters.begin(), out.rotated.letters.end() - 1);
    if (prefix.letters.empty())
        throw std::runtime_error("build_band_graph: band too short");
    out.graph.snake = build_snake_graph(q, prefix);
    bool last_direct = !out.rotated.letters.back().inverse;
    bool even = m % 2 == 0;
    if (last_direct)
        out.graph.glue = even ? BandGlue::WestEast : BandGlue::WestNorth;
    else
        out.graph.glue = even ? BandGlue::SouthNorth : BandGlue::SouthEast;
    return out;
}

EdgeKey cut_edge_key() { return EdgeKey{0, TileSide::N}; }

std::string edge_key_name(const EdgeKey &k) {
    if (k.tile == 0)
        return "cut";
    return std::to_string(k.tile) + side_name(k.side);
}

std::vector<std::pair<int, int>> FencePoset::hasse_arrows() const {
    std::vector<std::pair<int, int>> out = forcing;
    if (wrap_forcing)
        out.push_back({wrap_forcing->second, wrap_forcing->first});
    return out;
}

namespace {

std::vector<std::pair<int, int>> snake_forcing(const SnakeGraph &g) {
    std::vector<std::pair<int, int>> forcing;
    const int d = g.tiles();
    if (d <= 1)
        return forcing;
    bool up = g.dirs[0] == Dir::North; // up: 1 in S forces 2 in S
    forcing.push_back(up ? std::make_pair(1, 2) : std::make_pair(2, 1));
    for (int i = 2; i < d; ++i) {
        bool zigzag = g.dirs[i - 1] != g.dirs[i - 2];
        if (!zigzag)
            up = !up;
        forcing.push_back(up ? std::make_pair(i, i + 1) : std::make_pair(i + 1, i));
    }
    return forcing;
}

// Integer tile coordinates; tile 1 has south-west corner (0,0).
std::vector<std::pair<int, int>> tile_positions(const SnakeGraph &g) {
    std::vector<std::pair<int, int>> pos{{0, 0}};
    for (const Dir &d : g.dirs) {
        auto [x, y] = pos.back();
        pos.push_back(d == Dir::East ? std::make_pair(x + 1, y) : std::make_pair(x, y + 1));
    }
    return pos;
}

std::pair<std::pair<int, int>, std::pair<int, int>>
side_endpoints(std::pair<int, int> sw, TileSide side) {
    auto [x, y] = sw;
    switch (side) {
    case TileSide::S: return {{x, y}, {x + 1, y}};
    case TileSide::N: return {{x, y + 1}, {x + 1, y + 1}};
    case TileSide::W: return {{x, y}, {x, y + 1}};
    case TileSide::E: return {{x + 1, y}, {x + 1, y + 1}};
    }
    return {{0, 0}, {0, 0}};
}

// Internal edges live on the lower tile's glue side; only the side facing
// the previous tile needs remapping.
EdgeKey canonical_snake_key(const SnakeGraph &g, int tile, TileSide side) {
    if (tile > 1) {
        TileSide facing_prev = g.dirs[tile - 2] == Dir::North ? TileSide::S : TileSide::W;
        if (side == facing_prev)
            return EdgeKey{tile - 1, opposite(side)};
    }
    return EdgeKey{tile, side};
}

EdgeKey canonical_band_key(const BandGraph &g, int tile, TileSide side) {
    const int d = g.snake.tiles();
    if (tile == 1 && side == g.first_glue_side())
        return cut_edge_key();
    if (tile == d && side == g.last_glue_side())
        return cut_edge_key();
    return canonical_snake_key(g.snake, tile, side);
}

std::array<EdgeKey, 4> snake_tile_sides(const SnakeGraph &g, int tile) {
    return {canonical_snake_key(g, tile, TileSide::N), canonical_snake_key(g, tile, TileSide::E),
            canonical_snake_key(g, tile, TileSide::S), canonical_snake_key(g, tile, TileSide::W)};
}

std::array<EdgeKey, 4> band_tile_sides(const BandGraph &g, int tile) {
    return {canonical_band_key(g, tile, TileSide::N), canonical_band_key(g, tile, TileSide::E),
            canonical_band_key(g, tile, TileSide::S), canonical_band_key(g, tile, TileSide::W)};
}

} // namespace

FencePoset fence_poset(const SnakeGraph &g) {
    FencePoset p;
    p.size = g.tiles();
    p.forcing = snake_forcing(g);
    return p;
}

FencePoset fence_poset(const BandGraph &g) {
    FencePoset p;
    p.size = g.snake.tiles();
    p.forcing = snake_forcing(g.snake);
    auto pmin = minimal_matching_edges(g.snake);
    EdgeKey first_cut{1, g.first_glue_side()};
    EdgeKey first_canon = canonical_snake_key(g.snake, 1, g.first_glue_side());
    bool min_uses_first = pmin.count(first_canon) > 0;
    (void)first_cut;
    // cut edge on tile 1 in the minimal matching: a set containing tile 1
    // must contain the last tile, and dually.
    p.wrap_forcing = min_uses_first ? std::make_pair(1, p.size) : std::make_pair(p.size, 1);
    return p;
}

std::vector<std::vector<int>> enumerate_heights(const FencePoset &p) {
    std::vector<std::vector<int>> out;
    std::vector<int> h(p.size, 0);
    // forcing pairs adjacent in index distance; check incrementally
    std::vector<std::vector<std::pair<int, int>>> by_max(p.size + 1);
    for (auto [a, b] : p.forcing)
        by_max[std::max(a, b)].push_back({a, b});
    auto rec = [&](auto &&self, int tile) -> void {
        if (tile > p.size) {
            if (p.wrap_forcing) {
                auto [a, b] = *p.wrap_forcing;
                if (h[a - 1] == 1 && h[b - 1] == 0)
                    return;
            }
            out.push_back(h);
            return;
        }
        for (int v = 0; v <= 1; ++v) {
            h[tile - 1] = v;
            bool ok = true;
            for (auto [a, b] : by_max[tile])
                if (h[a - 1] == 1 && h[b - 1] == 0)
                    ok = false;
            if (ok)
                self(self, tile + 1);
        }
        h[tile - 1] = 0;
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> height_to_arc_vector(const SnakeGraph &g, const std::vector<int> &height,
                                      int n) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < g.tiles(); ++i)
        if (height[i])
            e[g.labels[i] - 1] += 1;
    return e;
}

std::set<EdgeKey> minimal_matching_edges(const SnakeGraph &g) {
    const int d = g.tiles();
    auto pos = tile_positions(g);
    // collect boundary edges with their endpoints
    std::map<EdgeKey, std::pair<std::pair<int, int>, std::pair<int, int>>> boundary;
    std::set<EdgeKey> internal;
    for (int t = 1; t < d; ++t)
        internal.insert(EdgeKey{t, g.dirs[t - 1] == Dir::North ? TileSide::N : TileSide::E});
    for (int t = 1; t <= d; ++t)
        for (TileSide s : {TileSide::N, TileSide::E, TileSide::S, TileSide::W}) {
            EdgeKey k = canonical_snake_key(g, t, s);
            if (internal.count(k))
                continue;
            boundary[k] = side_endpoints(pos[t - 1], s);
        }
    // boundary edges form one cycle through every vertex; alternate from S(G1)
    std::map<std::pair<int, int>, std::vector<EdgeKey>> at;
    for (const auto &[k, ends] : boundary) {
        at[ends.first].push_back(k);
        at[ends.second].push_back(k);
    }
    for (const auto &[v, inc] : at)
        if (inc.size() != 2)
            throw std::runtime_error("snake boundary is not a single cycle");
    EdgeKey start{1, TileSide::S};
    std::set<EdgeKey> pmin;
    EdgeKey cur = start;
    std::pair<int, int> vertex = boundary[start].second; // walk forward
    bool take = true;
    for (std::size_t step = 0; step < boundary.size(); ++step) {
        if (take)
            pmin.insert(cur);
        take = !take;
        const auto &inc = at[vertex];
        EdgeKey next = inc[0] == cur ? inc[1] : inc[0];
        const auto &ends = boundary[next];
        vertex = ends.first == vertex ? ends.second : ends.first;
        cur = next;
    }
    return pmin;
}

std::set<EdgeKey> maximal_matching_edges(const SnakeGraph &g) {
    auto pmin = minimal_matching_edges(g);
    const int d = g.tiles();
    std::set<EdgeKey> internal;
    for (int t = 1; t < d; ++t)
        internal.insert(EdgeKey{t, g.dirs[t - 1] == Dir::North ? TileSide::N : TileSide::E});
    std::set<EdgeKey> pmax;
    for (int t = 1; t <= d; ++t)
        for (TileSide s : {TileSide::N, TileSide::E, TileSide::S, TileSide::W}) {
            EdgeKey k = canonical_snake_key(g, t, s);
            if (!internal.count(k) && !pmin.count(k))
                pmax.insert(k);
        }
    return pmax;
}

namespace {

void twist(std::set<EdgeKey> &edges, const std::array<EdgeKey, 4> &sides) {
    const EdgeKey &n = sides[0], &e = sides[1], &s = sides[2], &w = sides[3];
    if (edges.count(n) && edges.count(s)) {
        edges.erase(n);
        edges.erase(s);
        edges.insert(e);
        edges.insert(w);
    } else if (edges.count(e) && edges.count(w)) {
        edges.erase(e);
        edges.erase(w);
        edges.insert(n);
        edges.insert(s);
    } else {
        throw std::runtime_error("twist: tile has no parallel edge pair in the matching");
    }
}

// Twist tiles of the ideal in an admissible order starting from the minimal
// matching.
template <typename SidesFn>
std::set<EdgeKey> materialize(std::set<EdgeKey> start, const FencePoset &p,
                              const std::vector<int> &height, SidesFn sides) {
    std::vector<std::pair<int, int>> all = p.forcing;
    if (p.wrap_forcing)
        all.push_back(*p.wrap_forcing);
    std::vector<char> want(p.size + 1, 0), done(p.size + 1, 0);
    int remaining = 0;
    for (int t = 1; t <= p.size; ++t) {
        want[t] = height[t - 1] ? 1 : 0;
        remaining += want[t];
    }
    std::set<EdgeKey> cur = std::move(start);
    while (remaining > 0) {
        int pick = -1;
        for (int t = 1; t <= p.size && pick < 0; ++t) {
            if (!want[t] || done[t])
                continue;
            bool ok = true;
            for (auto [a, b] : all)
                if (a == t && want[b] && !done[b])
                    ok = false;
            if (ok)
                pick = t;
        }
        if (pick < 0)
            throw std::runtime_error("materialize: height vector is not an order ideal");
        twist(cur, sides(pick));
        done[pick] = 1;
        --remaining;
    }
    return cur;
}

} // namespace

std::set<EdgeKey> matching_edges(const SnakeGraph &g, const std::vector<int> &height) {
    return materialize(minimal_matching_edges(g), fence_poset(g), height,
                       [&](int t) { return snake_tile_sides(g, t); });
}

std::set<EdgeKey> matching_edges(const BandGraph &g, const std::vector<int> &height) {
    auto raw = minimal_matching_edges(g.snake);
    EdgeKey e1 = canonical_snake_key(g.snake, 1, g.first_glue_side());
    EdgeKey ed = canonical_snake_key(g.snake, g.snake.tiles(), g.last_glue_side());
    bool has1 = raw.count(e1), hasd = raw.count(ed);
    if (has1 == hasd)
        throw std::runtime_error("band minimal matching must use exactly one cut edge");
    std::set<EdgeKey> start;
    for (const EdgeKey &k : raw)
        if (!(k == e1) && !(k == ed))
            start.insert(k);
    return materialize(std::move(start), fence_poset(g), height,
                       [&](int t) { return band_tile_sides(g, t); });
}

GraphExport export_graph(const SnakeGraph &g) {
    GraphExport out;
    auto pos = tile_positions(g);
    std::map<std::pair<int, int>, int> vid;
    auto vertex = [&](std::pair<int, int> c) {
        auto it = vid.find(c);
        if (it != vid.end())
            return it->second;
        int id = static_cast<int>(vid.size());
        vid[c] = id;
        return id;
    };
    for (int t = 1; t <= g.tiles(); ++t) {
        std::array<EdgeKey, 4> sides = snake_tile_sides(g, t);
        out.tile_sides[t] = sides;
        int i = 0;
        for (TileSide s : {TileSide::N, TileSide::E, TileSide::S, TileSide::W}) {
            auto ends = side_endpoints(pos[t - 1], s);
            out.edges[sides[i++]] = {vertex(ends.first), vertex(ends.second)};
        }
    }
    out.vertex_count = static_cast<int>(vid.size());
    return out;
}

GraphExport export_graph(const BandGraph &g) {
    const SnakeGraph &s = g.snake;
    const int d = s.tiles();
    auto pos = tile_positions(s);
    auto [X, Y] = pos[d - 1];

    // identification of the two cut-edge vertex pairs: a translated copy of
    // tile 1 continues the strip when d is even, a transposed copy when odd
    std::map<std::pair<int, int>, std::pair<int, int>> ident;
    switch (g.glue) {
    case BandGlue::WestEast:
        ident[{0, 0}] = {X + 1, Y};
        ident[{0, 1}] = {X + 1, Y + 1};
        break;
    case BandGlue::WestNorth:
        ident[{0, 0}] = {X, Y + 1};
        ident[{0, 1}] = {X + 1, Y + 1};
        break;
    case BandGlue::SouthNorth:
        ident[{0, 0}] = {X, Y + 1};
        ident[{1, 0}] = {X + 1, Y + 1};
        break;
    case BandGlue::SouthEast:
        ident[{0, 0}] = {X + 1, Y};
        ident[{1, 0}] = {X + 1, Y + 1};
        break;
    }
    auto canon_coord = [&](std::pair<int, int> c) {
        auto it = ident.find(c);
        return it == ident.end() ? c : it->second;
    };

    GraphExport out;
    std::map<std::pair<int, int>, int> vid;
    auto vertex = [&](std::pair<int, int> c) {
        c = canon_coord(c);
        auto it = vid.find(c);
        if (it != vid.end())
            return it->second;
        int id = static_cast<int>(vid.size());
        vid[c] = id;
        return id;
    };
    for (int t = 1; t <= d; ++t) {
        std::array<EdgeKey, 4> sides = band_tile_sides(g, t);
        out.tile_sides[t] = sides;
        int i = 0;
        for (TileSide sd : {TileSide::N, TileSide::E, TileSide::S, TileSide::W}) {
            auto ends = side_endpoints(pos[t - 1], sd);
            out.edges[sides[i++]] = {vertex(ends.first), vertex(ends.second)};
        }
    }
    out.vertex_count = static_cast<int>(vid.size());
    auto it = out.edges.find(cut_edge_key());
    if (it != out.edges.end())
        out.cut_vertices = it->second;
    return out;
}

namespace {

struct TileAssigner {
    std::map<EdgeKey, std::string> &out;
    void set(const EdgeKey &k, const std::string &id) {
        auto it = out.find(k);
        if (it != out.end() && it->second != id)
            throw std::runtime_error("edge label conflict at " + edge_key_name(k) + ": " +
                                     it->second + " vs " + id);
        out[k] = id;
    }
};

bool is_loop_letter(const Quiver &q, const Letter &l) {
    const Arrow &a = q.arrows[l.arrow];
    return a.source == a.target;
}

TileSide lateral_of_next(TileSide glue) { return glue == TileSide::N ? TileSide::E : TileSide::N; }
TileSide lateral_of_prev(TileSide glue) { return glue == TileSide::S ? TileSide::W : TileSide::S; }

// Common junction labelling between consecutive tiles j, j+1 (cyclic for
// bands): glue edge carries the shared triangle's third side, laterals carry
// the neighbouring crossings; a loop letter makes the whole junction carry
// the pending arc.
template <typename KeyFn>
void label_junction(const TriangulationData &t, const GentlePair &g,
                    const std::map<int, int> &arrow_triangle, const Letter &letter, int tile_a,
                    int tile_b, int arc_a, int arc_b, TileSide glue_a, KeyFn key,
                    TileAssigner &as) {
    const std::string &id_a = t.arc_ids[arc_a - 1];
    const std::string &id_b = t.arc_ids[arc_b - 1];
    TileSide glue_b = opposite(glue_a);
    if (is_loop_letter(g.quiver, letter)) {
        as.set(key(tile_a, glue_a), id_a);
        as.set(key(tile_a, lateral_of_next(glue_a)), id_a);
        as.set(key(tile_b, lateral_of_prev(glue_b)), id_a);
        return;
    }
    int tri = arrow_triangle.at(letter.arrow);
    as.set(key(tile_a, glue_a), t.third_edge(tri, id_a, id_b));
    as.set(key(tile_a, lateral_of_next(glue_a)), id_b);
    as.set(key(tile_b, lateral_of_prev(glue_b)), id_a);
}

int other_triangle(const TriangulationData &t, int arc_vertex, int avoid) {
    auto tris = t.triangles_of_arc(arc_vertex);
    for (int ti : tris)
        if (ti != avoid)
            return ti;
    throw std::runtime_error("arc " + t.arc_ids[arc_vertex - 1] + " has no second triangle");
}

} // namespace

EdgeLabeling label_edges(const TriangulationData &t, const GentlePair &g,
                         const std::map<int, int> &arrow_triangle, const StringWord &w,
                         const SnakeGraph &graph) {
    EdgeLabeling lab;
    TileAssigner as{lab.edge_ids};
    const Quiver &q = g.quiver;
    auto positions = word_positions(q, w);
    const int m = w.length();
    const int L = m + 1;
    auto key = [&](int tile, TileSide s) { return canonical_snake_key(graph, tile, s); };

    for (int j = 1; j <= m; ++j) {
        TileSide glue = graph.dirs[j - 1] == Dir::North ? TileSide::N : TileSide::E;
        label_junction(t, g, arrow_triangle, w.letters[j - 1], j, j + 1, positions[j - 1],
                       positions[j], glue, key, as);
    }

    // start tile: south-west pair
    {
        int c1 = positions[0];
        const std::string &id1 = t.arc_ids[c1 - 1];
        bool pending = t.is_pending_vertex(c1);
        if (m > 0 && pending && !is_loop_letter(q, w.letters[0])) {
            // the curve winds around the orbifold point before its first crossing
            as.set(key(1, TileSide::S), id1);
            as.set(key(1, TileSide::W), id1);
        } else {
            int tri;
            if (pending)
                tri = t.triangles_of_arc(c1).at(0);
            else if (m == 0)
                tri = t.triangles_of_arc(c1).at(0);
            else
                tri = other_triangle(t, c1, arrow_triangle.at(w.letters[0].arrow));
            as.set(key(1, TileSide::S), t.cw_neighbor(tri, id1));
            as.set(key(1, TileSide::W), t.ccw_neighbor(tri, id1));
        }
    }
    // end tile: north-east pair, placed by the tile's orientation
    {
        int cL = positions[L - 1];
        const std::string &idL = t.arc_ids[cL - 1];
        bool pending = t.is_pending_vertex(cL);
        if (m > 0 && pending && !is_loop_letter(q, w.letters[m - 1])) {
            as.set(key(L, TileSide::N), idL);
            as.set(key(L, TileSide::E), idL);
        } else if (m == 0 && pending) {
            as.set(key(L, TileSide::N), idL);
            as.set(key(L, TileSide::E), idL);
        } else {
            int tri;
            if (pending)
                tri = t.triangles_of_arc(cL).at(0);
            else if (m == 0)
                tri = t.triangles_of_arc(cL).size() > 1 ? t.triangles_of_arc(cL).at(1)
                                                        : t.triangles_of_arc(cL).at(0);
            else
                tri = other_triangle(t, cL, arrow_triangle.at(w.letters[m - 1].arrow));
            std::string cw = t.cw_neighbor(tri, idL);
            std::string ccw = t.ccw_neighbor(tri, idL);
            if (graph.rel(L) == 1) {
                as.set(key(L, TileSide::N), cw);
                as.set(key(L, TileSide::E), ccw);
            } else {
                as.set(key(L, TileSide::N), ccw);
                as.set(key(L, TileSide::E), cw);
            }
        }
    }
    return lab;
}

EdgeLabeling label_edges_band(const TriangulationData &t, const GentlePair &g,
                              const std::map<int, int> &arrow_triangle, const BandWord &rotated,
                              const BandGraph &graph) {
    EdgeLabeling lab;
    TileAssigner as{lab.edge_ids};
    const Quiver &q = g.quiver;
    auto positions = band_positions(q, rotated);
    const int m = rotated.length();
    if (graph.snake.tiles() != m)
        throw std::runtime_error("band graph does not match the band word");
    auto key = [&](int tile, TileSide s) { return canonical_band_key(graph, tile, s); };

    for (int j = 1; j <= m; ++j) {
        int tile_b = j == m ? 1 : j + 1;
        TileSide glue;
        if (j == m)
            glue = graph.last_glue_side();
        else
            glue = graph.snake.dirs[j - 1] == Dir::North ? TileSide::N : TileSide::E;
        int arc_a = positions[j - 1];
        int arc_b = positions[j % m];
        if (j == m) {
            // wrap junction: the glue sides of the two end tiles are the cut
            // edge; laterals as usual
            const Letter &letter = rotated.letters[m - 1];
            const std::string &id_a = t.arc_ids[arc_a - 1];
            const std::string &id_b = t.arc_ids[arc_b - 1];
            int tri = arrow_triangle.at(letter.arrow);
            as.set(cut_edge_key(), t.third_edge(tri, id_a, id_b));
            as.set(key(m, lateral_of_next(graph.last_glue_side())), id_b);
            as.set(key(1, lateral_of_prev(graph.first_glue_side())), id_a);
        } else {
            label_junction(t, g, arrow_triangle, rotated.letters[j - 1], j, tile_b, arc_a,
                           arc_b, glue, key, as);
        }
    }
    return lab;
}

ExponentVector matching_weight(const TriangulationData &t, const EdgeLabeling &labels,
                               const std::set<EdgeKey> &edges, int n) {
    ExponentVector e(n);
    for (const EdgeKey &k : edges) {
        auto it = labels.edge_ids.find(k);
        if (it == labels.edge_ids.end())
            throw std::runtime_error("matching_weight: unlabeled edge " + edge_key_name(k));
        int v = t.arc_vertex(it->second);
        if (v)
            e.x[v - 1] += 1;
    }
    return e;
}

ExponentVector crossing_monomial(const std::vector<int> &positions, int n) {
    ExponentVector e(n);
    for (int v : positions)
        e.x[v - 1] += 1;
    return e;
}

} // namespace orbcc

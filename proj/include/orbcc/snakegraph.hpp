#ifndef ORBCC_SNAKEGRAPH_HPP
#define ORBCC_SNAKEGRAPH_HPP

#include "orbcc/laurent.hpp"
#include "orbcc/orbifold.hpp"
#include "orbcc/quiver.hpp"
#include "orbcc/strings.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orbcc {

enum class Dir { North, East };
enum class TileSide { N, E, S, W };

TileSide opposite(TileSide s);
std::string side_name(TileSide s);

// Tiles are 1-based; dirs[i-1] is the side of tile i on which tile i+1 sits.
struct SnakeGraph {
    std::vector<int> labels; // tile -> quiver vertex
    std::vector<Dir> dirs;

    int tiles() const { return static_cast<int>(labels.size()); }
    int rel(int tile) const { return tile % 2 == 1 ? 1 : -1; }
};

enum class BandGlue { WestEast, WestNorth, SouthNorth, SouthEast };

struct BandGraph {
    SnakeGraph snake;
    BandGlue glue = BandGlue::WestEast;

    TileSide first_glue_side() const;  // W or S of tile 1
    TileSide last_glue_side() const;   // E or N of the last tile
};

SnakeGraph build_snake_graph(const Quiver &q, const StringWord &w);

// The band word is rotated (if needed) so its closing letter is not a loop;
// the rotated representative used for the graph is returned alongside.
struct BandBuild {
    BandGraph graph;
    BandWord rotated;
    int rotation = 0;
};

BandBuild build_band_graph(const GentlePair &g, const BandWord &w);
BandGraph make_band_graph(SnakeGraph snake, BandGlue glue); // direct constructor

// Canonical edge naming: internal edges live on the lower tile's glue side;
// the band cut edge is tile 0.
struct EdgeKey {
    int tile = 0; // 0 = band cut edge
    TileSide side = TileSide::N;

    bool operator<(const EdgeKey &o) const {
        return tile != o.tile ? tile < o.tile : side < o.side;
    }
    bool operator==(const EdgeKey &o) const { return tile == o.tile && side == o.side; }
};

EdgeKey cut_edge_key();
std::string edge_key_name(const EdgeKey &k);

// Cover relations of the fence poset, stored as forcing pairs: a subset S of
// tiles is admissible iff a in S implies b in S for every pair (a, b).
struct FencePoset {
    int size = 0;
    std::vector<std::pair<int, int>> forcing;               // consecutive tiles
    std::optional<std::pair<int, int>> wrap_forcing;        // band closure
    // Hasse arrows as the source material renders them: consecutive covers
    // as their forcing pair, the band wrap reversed.
    std::vector<std::pair<int, int>> hasse_arrows() const;
};

FencePoset fence_poset(const SnakeGraph &g);
FencePoset fence_poset(const BandGraph &g);

// All admissible height vectors, sorted lexicographically.
std::vector<std::vector<int>> enumerate_heights(const FencePoset &p);

std::vector<int> height_to_arc_vector(const SnakeGraph &g, const std::vector<int> &height,
                                      int n);

// Explicit edge sets.  Band matchings use the band's edge keys (the cut edge
// appears at most once).
std::set<EdgeKey> minimal_matching_edges(const SnakeGraph &g);
std::set<EdgeKey> maximal_matching_edges(const SnakeGraph &g);
std::set<EdgeKey> matching_edges(const SnakeGraph &g, const std::vector<int> &height);
std::set<EdgeKey> matching_edges(const BandGraph &g, const std::vector<int> &height);

// Concrete vertex/edge incidence, with band identifications applied.
struct GraphExport {
    int vertex_count = 0;
    std::map<EdgeKey, std::pair<int, int>> edges;
    std::map<int, std::array<EdgeKey, 4>> tile_sides;     // N,E,S,W per tile
    std::optional<std::pair<int, int>> cut_vertices;      // band: classes of x and y
};

GraphExport export_graph(const SnakeGraph &g);
GraphExport export_graph(const BandGraph &g);

// Tile-side labels: every edge carries a triangulation edge id; ids naming
// boundary segments contribute weight 1.
struct EdgeLabeling {
    std::map<EdgeKey, std::string> edge_ids;
};

EdgeLabeling label_edges(const TriangulationData &t, const GentlePair &g,
                         const std::map<int, int> &arrow_triangle, const StringWord &w,
                         const SnakeGraph &graph);
EdgeLabeling label_edges_band(const TriangulationData &t, const GentlePair &g,
                              const std::map<int, int> &arrow_triangle, const BandWord &rotated,
                              const BandGraph &graph);

// Product of the x-variables of the matching's edges, as an exponent vector.
ExponentVector matching_weight(const TriangulationData &t, const EdgeLabeling &labels,
                               const std::set<EdgeKey> &edges, int n);

// x-exponents of cross(gamma, T): one per crossing.
ExponentVector crossing_monomial(const std::vector<int> &positions, int n);

} // namespace orbcc

#endif

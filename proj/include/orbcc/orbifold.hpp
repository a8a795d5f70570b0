#ifndef ORBCC_ORBIFOLD_HPP
#define ORBCC_ORBIFOLD_HPP

#include "orbcc/quiver.hpp"
#include "orbcc/strings.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbcc {

// Combinatorial triangulation of an unpunctured orbifold with order-3
// orbifold points.  Triangles list their edges counterclockwise.
struct TriangulationData {
    std::string name;
    std::vector<std::string> arc_ids;     // interior arcs; vertex i+1 <-> arc_ids[i]
    std::vector<bool> arc_pending;
    std::vector<std::string> boundary_ids;
    std::vector<std::array<std::string, 3>> triangles;

    int n() const { return static_cast<int>(arc_ids.size()); }
    int arc_vertex(const std::string &id) const;      // 1..n, or 0 if not an interior arc
    bool is_boundary(const std::string &id) const;
    bool is_pending_vertex(int v) const { return arc_pending[v - 1]; }

    // Triangles containing the given interior arc, in list order.
    std::vector<int> triangles_of_arc(int v) const;
    // Edge id following (ccw) / preceding (cw) the given edge in a triangle.
    std::string ccw_neighbor(int triangle, const std::string &edge) const;
    std::string cw_neighbor(int triangle, const std::string &edge) const;
    // The edge of the triangle distinct from the two given ones.
    std::string third_edge(int triangle, const std::string &a, const std::string &b) const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<int> triangle_types; // pending-edge count per triangle
};

ValidationReport validate(const TriangulationData &t);

// Arrow provenance: which triangle produced each arrow (loops point at the
// pending arc's unique triangle).
struct GentleFromTriangulation {
    GentlePair pair;
    std::map<int, int> arrow_triangle; // arrow index -> triangle index
};

GentleFromTriangulation build_gentle_pair(const TriangulationData &t);
GeneralizedClusterQuiver build_generalized_quiver(const TriangulationData &t);

struct CrossingStep {
    std::string arc;
    std::optional<char> side;              // 'l' or 'r': marked point side on loop steps
    std::optional<std::string> arrow_hint; // disambiguator when two triangles are shared
};

StringWord string_from_crossings(const TriangulationData &t, const GentlePair &g,
                                 const std::map<int, int> &arrow_triangle,
                                 const std::vector<CrossingStep> &crossings);

// Line-oriented file format; '#' starts a comment.  Throws parse_error /
// validation via exceptions carrying messages.
struct OrbifoldParseError : std::runtime_error {
    explicit OrbifoldParseError(const std::string &m) : std::runtime_error(m) {}
};

TriangulationData parse_orbifold_text(const std::string &text);
TriangulationData parse_orbifold_file(const std::string &path);

} // namespace orbcc

#endif

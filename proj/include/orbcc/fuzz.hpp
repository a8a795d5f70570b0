#ifndef ORBCC_FUZZ_HPP
#define ORBCC_FUZZ_HPP

#include "orbcc/ccmap.hpp"
#include "orbcc/quiver.hpp"
#include "orbcc/snakegraph.hpp"
#include "orbcc/strings.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbcc {

// Slow reference matcher: all perfect matchings of an exported graph.
std::vector<std::set<EdgeKey>> brute_force_perfect_matchings(const GraphExport &g);
// All good matchings of a band graph (perfect matchings of the identified
// graph that contain the cut edge or whose edges at the two identified
// vertices lie on the same side of it).
std::vector<std::set<EdgeKey>> brute_force_good_matchings(const BandGraph &b);

struct FuzzOptions {
    std::uint64_t seed = 1;
    int count = 200;
    int max_len = 8;
};

struct FuzzSummary {
    int cases = 0;
    int strings = 0;
    int bands = 0;
    std::vector<std::string> failures; // one line each, with a reproduction hint
};

// Random valid words over the pair; every case runs the oracle batteries:
// matching enumeration vs brute force, Euler characteristics vs coordinate
// submodules, cc vs expansion (both routes when labels available), the
// matching-weight identity, AR translate vs the homological translate, and
// the structural lattice/positivity invariants.
FuzzSummary fuzz_pair(const GentlePair &g, std::optional<LabelContext> labels,
                      const FuzzOptions &opt);

} // namespace orbcc

#endif

#ifndef ORBCC_CCMAP_HPP
#define ORBCC_CCMAP_HPP

#include "orbcc/laurent.hpp"
#include "orbcc/orbifold.hpp"
#include "orbcc/quiver.hpp"
#include "orbcc/repmod.hpp"
#include "orbcc/snakegraph.hpp"
#include "orbcc/strings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbcc {

struct GVector {
    std::vector<int> g;
    std::vector<int> a; // injective envelope multiplicities (deeps)
    std::vector<int> b; // strict peaks
    std::vector<int> r; // end-extendability correction
};

GVector g_vector_string(const GentlePair &gp, const StringWord &w);
GVector g_vector_band(const GentlePair &gp, const BandWord &w);

// Caldero-Chapoton map with principal coefficients.
LaurentPolynomial cc_prin(const GentlePair &gp, const StringWord &w);
LaurentPolynomial cc_prin(const GentlePair &gp, const BandWord &w);

// Labels for the direct weight route, packaged with the triangulation.
struct LabelContext {
    const TriangulationData *tri = nullptr;
    const std::map<int, int> *arrow_triangle = nullptr;
};

// Snake-graph expansion.  Without a label context this is the height route
// sum over matchings; with one, edge weights are computed directly from the
// labelled graph and divided by cross(gamma, T).
LaurentPolynomial snake_expansion(const GentlePair &gp, const StringWord &w,
                                  std::optional<LabelContext> labels = std::nullopt);
LaurentPolynomial snake_expansion(const GentlePair &gp, const BandWord &w,
                                  std::optional<LabelContext> labels = std::nullopt);

// wt(P_min)/cross equals x^g via the label route.
bool minimal_term_check(const GentlePair &gp, const StringWord &w, const LabelContext &labels);
bool minimal_term_check(const GentlePair &gp, const BandWord &w, const LabelContext &labels);

struct VerifyResult {
    bool ok = true;
    std::string diff; // term-level mismatch report
};

VerifyResult verify_cc_equals_expansion(const GentlePair &gp, const StringWord &w,
                                        std::optional<LabelContext> labels = std::nullopt);
VerifyResult verify_cc_equals_expansion(const GentlePair &gp, const BandWord &w,
                                        std::optional<LabelContext> labels = std::nullopt);

std::string polynomial_diff(const LaurentPolynomial &a, const LaurentPolynomial &b,
                            const std::string &name_a, const std::string &name_b);

} // namespace orbcc

#endif

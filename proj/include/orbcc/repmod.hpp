#ifndef ORBCC_REPMOD_HPP
#define ORBCC_REPMOD_HPP

#include "orbcc/quiver.hpp"
#include "orbcc/snakegraph.hpp"
#include "orbcc/strings.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace orbcc {

// Exact rational arithmetic on 64-bit numerator/denominator; throws on
// overflow (dimensions here are tiny).
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n) {}
    Rat(long long n, long long d);

    Rat operator+(const Rat &o) const;
    Rat operator-(const Rat &o) const;
    Rat operator*(const Rat &o) const;
    Rat operator/(const Rat &o) const;
    Rat operator-() const { return Rat(-num, den); }
    bool operator==(const Rat &o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat &o) const { return !(*this == o); }
    bool is_zero() const { return num == 0; }
};

using Matrix = std::vector<std::vector<Rat>>; // rows x cols

Matrix zero_matrix(int rows, int cols);
Matrix matrix_product(const Matrix &a, const Matrix &b);
int matrix_rank(Matrix m);
std::vector<std::vector<Rat>> kernel_basis(const Matrix &m); // column vectors

// Quiver representation: phi_a maps the source fibre to the target fibre;
// matrix columns index the source basis.
struct Representation {
    int n = 0;
    std::vector<int> dims;                 // per vertex (1..n -> dims[v-1])
    std::map<int, Matrix> arrow_matrix;    // arrow index -> matrix

    const Matrix &matrix_of(int arrow) const;
};

Representation string_representation(const GentlePair &g, const StringWord &w);
Representation band_representation(const GentlePair &g, const BandWord &w, const Rat &lambda);

// Offsets of word positions inside the per-vertex bases (position p of the
// word sits at basis slot position_slot[p] of vertex w(p)).
std::vector<int> position_slots(const Quiver &q, const std::vector<int> &positions);

// true iff matrix(b) * matrix(a) == 0 for every relation (a, b).
bool relations_vanish(const GentlePair &g, const Representation &rep);

// Closed position subsets (canonical submodules), as indicator vectors with
// their dimension vectors, in indicator lex order.
struct ClosedSubset {
    std::vector<int> indicator; // one entry per word position
    std::vector<int> dim;       // per quiver vertex
};

FencePoset letter_flow_poset(const Quiver &q, const StringWord &w);
FencePoset letter_flow_poset_band(const Quiver &q, const BandWord &w);

std::vector<ClosedSubset> canonical_submodules(const Quiver &q, const StringWord &w);
std::vector<ClosedSubset> canonical_submodules(const Quiver &q, const BandWord &w);

std::map<std::vector<int>, long long> euler_char_table(const Quiver &q, const StringWord &w);
std::map<std::vector<int>, long long> euler_char_table(const Quiver &q, const BandWord &w);

// Independent oracle: every coordinate subspace (subset of the canonical
// basis) invariant under all arrow matrices, counted by dimension vector.
std::map<std::vector<int>, long long> brute_force_submodules(const GentlePair &g,
                                                             const Representation &rep,
                                                             int max_total_dim = 18);

// All relation-free paths of the pair; throws if the algebra is infinite
// dimensional.
struct PathBasis {
    struct Path {
        int from = 0, to = 0;
        std::vector<int> arrows;
    };
    std::vector<Path> paths;
};

PathBasis enumerate_paths(const GentlePair &g);

Representation projective_representation(const GentlePair &g, int v);
Representation injective_representation(const GentlePair &g, int v);

// Finds an invertible intertwiner; deterministic.
bool representations_isomorphic(const GentlePair &g, const Representation &a,
                                const Representation &b);

struct TauResult {
    std::vector<int> dim;
    StringWord word; // identified string, canonical up to inversion
};

// Auslander-Reiten translate via minimal projective presentation, transpose
// over the opposite algebra and duality.  Throws on projective input.
TauResult tau_homological(const GentlePair &g, const StringWord &w);

} // namespace orbcc

#endif

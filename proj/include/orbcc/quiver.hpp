#ifndef ORBCC_QUIVER_HPP
#define ORBCC_QUIVER_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace orbcc {

struct Arrow {
    std::string id; // stable token, unique within the quiver
    int source = 0; // vertices are 1..n
    int target = 0;
};

// Plain quiver: loops and parallel arrows allowed.
struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows;

    int arrow_index(const std::string &id) const; // -1 if absent
    const Arrow &arrow(int idx) const { return arrows[idx]; }
    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_into(int v) const;
    void add_arrow(const std::string &id, int source, int target);
    void check() const; // id uniqueness, endpoint range
};

// Integer matrices print row-major, comma-separated.
using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix c_matrix(const Quiver &q);
IntMatrix c_matrix_principal(const Quiver &q);
std::string format_matrix(const IntMatrix &m);
std::vector<long long> matrix_apply(const IntMatrix &m, const std::vector<int> &v);

// Cluster quiver (no loops, no directed 2-cycles) with a standard/pending
// vertex partition.
struct GeneralizedClusterQuiver {
    Quiver quiver;
    std::set<int> pending;

    void check() const; // no loops, no 2-cycles, pending within range
};

GeneralizedClusterQuiver mutate(const GeneralizedClusterQuiver &q, int k);

// Equality up to a bijection of arrow ids respecting endpoints.
bool same_quiver_up_to_arrow_ids(const Quiver &a, const Quiver &b);
bool same_generalized_quiver(const GeneralizedClusterQuiver &a,
                             const GeneralizedClusterQuiver &b);

// Quiver plus length-two monomial relations.  A relation (a, b) means the
// path "a then b" (target(a) == source(b)) lies in the ideal.
struct GentlePair {
    Quiver quiver;
    std::set<std::pair<int, int>> relations; // pairs of arrow indices

    bool in_ideal(int a, int b) const { return relations.count({a, b}) > 0; }
    void add_relation(const std::string &a, const std::string &b);
    void check() const; // composability of every relation
};

struct GentleCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

GentleCheck is_gentle(const GentlePair &g);

} // namespace orbcc

#endif

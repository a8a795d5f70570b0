#include "orbcc/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace orbcc {

int Quiver::arrow_index(const std::string &id) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id)
            return static_cast<int>(i);
    return -1;
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].source == v)
            r.push_back(static_cast<int>(i));
    return r;
}

std::vector<int> Quiver::arrows_into(int v) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].target == v)
            r.push_back(static_cast<int>(i));
    return r;
}

void Quiver::add_arrow(const std::string &id, int source, int target) {
    arrows.push_back(Arrow{id, source, target});
}

void Quiver::check() const {
    std::set<std::string> seen;
    for (const auto &a : arrows) {
        if (!seen.insert(a.id).second)
            throw std::runtime_error("quiver: duplicate arrow id " + a.id);
        if (a.source < 1 || a.source > n || a.target < 1 || a.target > n)
            throw std::runtime_error("quiver: arrow " + a.id + " endpoint out of range");
    }
}

IntMatrix c_matrix(const Quiver &q) {
    IntMatrix m(q.n, std::vector<long long>(q.n, 0));
    for (const auto &a : q.arrows) {
        if (a.source == a.target)
            continue; // loop contributions cancel
        m[a.target - 1][a.source - 1] += 1;
        m[a.source - 1][a.target - 1] -= 1;
    }
    return m;
}

IntMatrix c_matrix_principal(const Quiver &q) {
    IntMatrix m = c_matrix(q);
    for (int i = 0; i < q.n; ++i) {
        std::vector<long long> row(q.n, 0);
        row[i] = 1;
        m.push_back(row);
    }
    return m;
}

std::string format_matrix(const IntMatrix &m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r)
            os << "\n";
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (c)
                os << ",";
            os << m[r][c];
        }
    }
    return os.str();
}

std::vector<long long> matrix_apply(const IntMatrix &m, const std::vector<int> &v) {
    std::vector<long long> r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] += m[i][j] * v[j];
    return r;
}

void GeneralizedClusterQuiver::check() const {
    quiver.check();
    std::map<std::pair<int, int>, int> mult;
    for (const auto &a : quiver.arrows) {
        if (a.source == a.target)
            throw std::runtime_error("generalized cluster quiver: loop at vertex " +
                                     std::to_string(a.source));
        mult[{a.source, a.target}]++;
    }
    for (const auto &[st, k] : mult) {
        (void)k;
        if (mult.count({st.second, st.first}))
            throw std::runtime_error("generalized cluster quiver: 2-cycle between " +
                                     std::to_string(st.first) + " and " +
                                     std::to_string(st.second));
    }
    for (int v : pending)
        if (v < 1 || v > quiver.n)
            throw std::runtime_error("generalized cluster quiver: pending vertex out of range");
}

GeneralizedClusterQuiver mutate(const GeneralizedClusterQuiver &q, int k) {
    if (k < 1 || k > q.quiver.n)
        throw std::runtime_error("mutate: vertex out of range");
    const int n = q.quiver.n;
    std::vector<std::vector<long long>> mult(n + 1, std::vector<long long>(n + 1, 0));
    for (const auto &a : q.quiver.arrows)
        mult[a.source][a.target]++;

    const long long factor = q.pending.count(k) ? 2 : 1;
    // (1) for each path i -> k -> j add `factor` arrows i -> j
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != k && j != k)
                mult[i][j] += factor * mult[i][k] * mult[k][j];
    // (2) reverse arrows incident to k
    for (int v = 1; v <= n; ++v) {
        if (v == k)
            continue;
        std::swap(mult[v][k], mult[k][v]);
    }
    // (3) cancel 2-cycles
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            long long c = std::min(mult[i][j], mult[j][i]);
            mult[i][j] -= c;
            mult[j][i] -= c;
        }

    GeneralizedClusterQuiver out;
    out.quiver.n = n;
    out.pending = q.pending;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (long long c = 0; c < mult[i][j]; ++c)
                out.quiver.add_arrow(std::to_string(i) + ">" + std::to_string(j) + ":" +
                                         std::to_string(c),
                                     i, j);
    out.check();
    return out;
}

bool same_quiver_up_to_arrow_ids(const Quiver &a, const Quiver &b) {
    if (a.n != b.n || a.arrows.size() != b.arrows.size())
        return false;
    std::multiset<std::pair<int, int>> sa, sb;
    for (const auto &x : a.arrows)
        sa.insert({x.source, x.target});
    for (const auto &x : b.arrows)
        sb.insert({x.source, x.target});
    return sa == sb;
}

bool same_generalized_quiver(const GeneralizedClusterQuiver &a,
                             const GeneralizedClusterQuiver &b) {
    return a.pending == b.pending && same_quiver_up_to_arrow_ids(a.quiver, b.quiver);
}

void GentlePair::add_relation(const std::string &a, const std::string &b) {
    int ia = quiver.arrow_index(a), ib = quiver.arrow_index(b);
    if (ia < 0 || ib < 0)
        throw std::runtime_error("relation references unknown arrow");
    relations.insert({ia, ib});
}

void GentlePair::check() const {
    quiver.check();
    for (const auto &[a, b] : relations) {
        if (a < 0 || b < 0 || a >= (int)quiver.arrows.size() || b >= (int)quiver.arrows.size())
            throw std::runtime_error("relation arrow index out of range");
        if (quiver.arrows[a].target != quiver.arrows[b].source)
            throw std::runtime_error("relation (" + quiver.arrows[a].id + "," +
                                     quiver.arrows[b].id + ") is not a composable path");
    }
}

GentleCheck is_gentle(const GentlePair &g) {
    GentleCheck r;
    const Quiver &q = g.quiver;
    auto fail = [&](const std::string &msg) {
        r.ok = false;
        r.violations.push_back(msg);
    };
    for (int v = 1; v <= q.n; ++v) {
        if (q.arrows_into(v).size() > 2)
            fail("condition (1): vertex " + std::to_string(v) + " has more than two incoming arrows");
        if (q.arrows_from(v).size() > 2)
            fail("condition (1): vertex " + std::to_string(v) + " has more than two outgoing arrows");
    }
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
        int in_ideal = 0, out_ideal = 0;
        for (int a : q.arrows_into(q.arrows[b].source)) {
            if (g.in_ideal(a, (int)b))
                ++in_ideal;
            else
                ++out_ideal;
        }
        if (out_ideal > 1)
            fail("condition (2): arrow " + q.arrows[b].id +
                 " has more than one composition a*" + q.arrows[b].id + " outside the ideal");
        if (in_ideal > 1)
            fail("condition (2): arrow " + q.arrows[b].id +
                 " has more than one composition a*" + q.arrows[b].id + " inside the ideal");
    }
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
        int in_ideal = 0, out_ideal = 0;
        for (int c : q.arrows_from(q.arrows[b].target)) {
            if (g.in_ideal((int)b, c))
                ++in_ideal;
            else
                ++out_ideal;
        }
        if (out_ideal > 1)
            fail("condition (3): arrow " + q.arrows[b].id +
                 " has more than one composition " + q.arrows[b].id + "*c outside the ideal");
        if (in_ideal > 1)
            fail("condition (3): arrow " + q.arrows[b].id +
                 " has more than one composition " + q.arrows[b].id + "*c inside the ideal");
    }
    return r;
}

} // namespace orbcc

#include "orbcc/repmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbcc {

namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

long long checked(__int128 v) {
    if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
        throw std::runtime_error("rational overflow");
    return static_cast<long long>(v);
}

} // namespace

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0)
        throw std::runtime_error("rational division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = gcd_ll(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0)
        den = 1;
}

Rat Rat::operator+(const Rat &o) const {
    return Rat(checked((__int128)num * o.den + (__int128)o.num * den),
               checked((__int128)den * o.den));
}
Rat Rat::operator-(const Rat &o) const { return *this + Rat(-o.num, o.den); }
Rat Rat::operator*(const Rat &o) const {
    return Rat(checked((__int128)num * o.num), checked((__int128)den * o.den));
}
Rat Rat::operator/(const Rat &o) const {
    if (o.num == 0)
        throw std::runtime_error("rational division by zero");
    return Rat(checked((__int128)num * o.den), checked((__int128)den * o.num));
}

Matrix zero_matrix(int rows, int cols) { return Matrix(rows, std::vector<Rat>(cols)); }

Matrix matrix_product(const Matrix &a, const Matrix &b) {
    int ar = (int)a.size(), ac = ar ? (int)a[0].size() : 0;
    int br = (int)b.size(), bc = br ? (int)b[0].size() : 0;
    if (ac != br)
        throw std::runtime_error("matrix product shape mismatch");
    Matrix r = zero_matrix(ar, bc);
    for (int i = 0; i < ar; ++i)
        for (int k = 0; k < ac; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (int j = 0; j < bc; ++j)
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

namespace {

std::vector<int> echelon(Matrix &m) {
    std::vector<int> pivots;
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j)
            m[r][j] = m[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

using Vec = std::vector<Rat>;

Vec matrix_vec(const Matrix &m, const Vec &v) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] = r[i] + m[i][j] * v[j];
    return r;
}

bool is_zero_vec(const Vec &v) {
    for (const Rat &x : v)
        if (!x.is_zero())
            return false;
    return true;
}

// Incremental column-space tracker with greedy complement extension.
struct Span {
    // echelon rows: (pivot index, normalized vector)
    std::vector<std::pair<int, Vec>> rows;

    Vec reduce(Vec v) const {
        for (const auto &[p, u] : rows)
            if (!v[p].is_zero()) {
                Rat f = v[p];
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] = v[j] - f * u[j];
            }
        return v;
    }
    // returns true if the vector enlarged the span
    bool add(const Vec &v) {
        Vec r = reduce(v);
        int p = -1;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (!r[j].is_zero()) {
                p = (int)j;
                break;
            }
        if (p < 0)
            return false;
        Rat inv = Rat(1) / r[p];
        for (auto &x : r)
            x = x * inv;
        rows.push_back({p, r});
        return true;
    }
    bool contains(const Vec &v) const { return is_zero_vec(reduce(v)); }
    int dim() const { return (int)rows.size(); }
};

} // namespace

int matrix_rank(Matrix m) { return (int)echelon(m).size(); }

std::vector<std::vector<Rat>> kernel_basis(const Matrix &m_in) {
    Matrix m = m_in;
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    std::vector<std::vector<Rat>> basis;
    if (rows == 0) {
        for (int c = 0; c < cols; ++c) {
            std::vector<Rat> v(cols);
            v[c] = Rat(1);
            basis.push_back(v);
        }
        return basis;
    }
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rat> v(cols);
        v[free] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(v);
    }
    return basis;
}

const Matrix &Representation::matrix_of(int arrow) const {
    auto it = arrow_matrix.find(arrow);
    if (it == arrow_matrix.end())
        throw std::runtime_error("representation is missing an arrow matrix");
    return it->second;
}

std::vector<int> position_slots(const Quiver &q, const std::vector<int> &positions) {
    std::vector<int> count(q.n + 1, 0);
    std::vector<int> slot;
    for (int v : positions)
        slot.push_back(count[v]++);
    return slot;
}

namespace {

Representation word_representation(const GentlePair &g, const std::vector<int> &positions,
                                   const std::vector<Letter> &letters, bool cyclic,
                                   const Rat &lambda) {
    const Quiver &q = g.quiver;
    Representation rep;
    rep.n = q.n;
    rep.dims.assign(q.n, 0);
    for (int v : positions)
        rep.dims[v - 1]++;
    auto slots = position_slots(q, positions);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        rep.arrow_matrix[(int)a] =
            zero_matrix(rep.dims[q.arrows[a].target - 1], rep.dims[q.arrows[a].source - 1]);
    const int m = (int)letters.size();
    for (int i = 0; i < m; ++i) {
        const Letter &l = letters[i];
        int p = i, pn = cyclic ? (i + 1) % (int)positions.size() : i + 1;
        Rat scale = (cyclic && i == m - 1) ? lambda : Rat(1);
        Matrix &mat = rep.arrow_matrix[l.arrow];
        if (!l.inverse)
            mat[slots[pn]][slots[p]] = mat[slots[pn]][slots[p]] + scale; // z_p -> z_{p+1}
        else
            mat[slots[p]][slots[pn]] = mat[slots[p]][slots[pn]] + scale; // z_{p+1} -> z_p
    }
    return rep;
}

} // namespace

Representation string_representation(const GentlePair &g, const StringWord &w) {
    if (auto err = validate_string(g, w))
        throw std::runtime_error("string_representation: " + *err);
    auto positions = word_positions(g.quiver, w);
    return word_representation(g, positions, w.letters, false, Rat(1));
}

Representation band_representation(const GentlePair &g, const BandWord &w, const Rat &lambda) {
    if (auto err = validate_band(g, w))
        throw std::runtime_error("band_representation: " + *err);
    if (lambda.is_zero())
        throw std::runtime_error("band_representation: lambda must be nonzero");
    auto positions = band_positions(g.quiver, w);
    return word_representation(g, positions, w.letters, true, lambda);
}

bool relations_vanish(const GentlePair &g, const Representation &rep) {
    for (auto [a, b] : g.relations) {
        Matrix prod = matrix_product(rep.matrix_of(b), rep.matrix_of(a));
        for (const auto &row : prod)
            for (const Rat &x : row)
                if (!x.is_zero())
                    return false;
    }
    return true;
}

FencePoset letter_flow_poset(const Quiver &q, const StringWord &w) {
    (void)q;
    FencePoset p;
    p.size = w.length() + 1;
    for (int i = 0; i < w.length(); ++i) {
        if (!w.letters[i].inverse)
            p.forcing.push_back({i + 1, i + 2});
        else
            p.forcing.push_back({i + 2, i + 1});
    }
    return p;
}

FencePoset letter_flow_poset_band(const Quiver &q, const BandWord &w) {
    (void)q;
    FencePoset p;
    const int m = w.length();
    p.size = m;
    for (int i = 0; i < m - 1; ++i) {
        if (!w.letters[i].inverse)
            p.forcing.push_back({i + 1, i + 2});
        else
            p.forcing.push_back({i + 2, i + 1});
    }
    p.wrap_forcing = !w.letters[m - 1].inverse ? std::make_pair(m, 1) : std::make_pair(1, m);
    return p;
}

namespace {

std::vector<ClosedSubset> closed_subsets(const FencePoset &p, const std::vector<int> &positions,
                                         int n) {
    std::vector<ClosedSubset> out;
    for (const auto &h : enumerate_heights(p)) {
        ClosedSubset c;
        c.indicator = h;
        c.dim.assign(n, 0);
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i])
                c.dim[positions[i] - 1]++;
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

std::vector<ClosedSubset> canonical_submodules(const Quiver &q, const StringWord &w) {
    return closed_subsets(letter_flow_poset(q, w), word_positions(q, w), q.n);
}

std::vector<ClosedSubset> canonical_submodules(const Quiver &q, const BandWord &w) {
    return closed_subsets(letter_flow_poset_band(q, w), band_positions(q, w), q.n);
}

std::map<std::vector<int>, long long> euler_char_table(const Quiver &q, const StringWord &w) {
    std::map<std::vector<int>, long long> t;
    for (const auto &c : canonical_submodules(q, w))
        t[c.dim]++;
    return t;
}

std::map<std::vector<int>, long long> euler_char_table(const Quiver &q, const BandWord &w) {
    std::map<std::vector<int>, long long> t;
    for (const auto &c : canonical_submodules(q, w))
        t[c.dim]++;
    return t;
}

std::map<std::vector<int>, long long> brute_force_submodules(const GentlePair &g,
                                                             const Representation &rep,
                                                             int max_total_dim) {
    int total = std::accumulate(rep.dims.begin(), rep.dims.end(), 0);
    if (total > max_total_dim)
        throw std::runtime_error("brute_force_submodules: dimension guard exceeded");
    const Quiver &q = g.quiver;
    std::vector<std::vector<int>> index(rep.dims.size());
    std::vector<int> vertex_of;
    for (std::size_t v = 0; v < rep.dims.size(); ++v)
        for (int k = 0; k < rep.dims[v]; ++k) {
            index[v].push_back((int)vertex_of.size());
            vertex_of.push_back((int)v);
        }
    std::map<std::vector<int>, long long> hist;
    for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
        bool ok = true;
        for (std::size_t ar = 0; ar < q.arrows.size() && ok; ++ar) {
            int s = q.arrows[ar].source - 1, t = q.arrows[ar].target - 1;
            const Matrix &m = rep.matrix_of((int)ar);
            for (int k = 0; k < rep.dims[s] && ok; ++k) {
                if (!(mask >> index[s][k] & 1))
                    continue;
                for (int i = 0; i < rep.dims[t]; ++i)
                    if (!m[i][k].is_zero() && !(mask >> index[t][i] & 1)) {
                        ok = false;
                        break;
                    }
            }
        }
        if (!ok)
            continue;
        std::vector<int> dim(rep.dims.size(), 0);
        for (int b = 0; b < total; ++b)
            if (mask >> b & 1)
                dim[vertex_of[b]]++;
        hist[dim]++;
    }
    return hist;
}

PathBasis enumerate_paths(const GentlePair &g) {
    PathBasis pb;
    const Quiver &q = g.quiver;
    std::vector<PathBasis::Path> frontier;
    for (int v = 1; v <= q.n; ++v) {
        PathBasis::Path p{v, v, {}};
        pb.paths.push_back(p);
        frontier.push_back(p);
    }
    while (!frontier.empty()) {
        std::vector<PathBasis::Path> next;
        for (const auto &p : frontier) {
            for (int a : q.arrows_from(p.to)) {
                if (!p.arrows.empty() && g.in_ideal(p.arrows.back(), a))
                    continue;
                if (std::find(p.arrows.begin(), p.arrows.end(), a) != p.arrows.end())
                    throw std::runtime_error(
                        "enumerate_paths: relation-free cycle (algebra infinite dimensional)");
                PathBasis::Path e = p;
                e.arrows.push_back(a);
                e.to = q.arrows[a].target;
                pb.paths.push_back(e);
                next.push_back(e);
            }
        }
        frontier = std::move(next);
        if (pb.paths.size() > 20000)
            throw std::runtime_error("enumerate_paths: too many paths");
    }
    return pb;
}

namespace {

std::string path_key(int from, const std::vector<int> &arrows) {
    std::ostringstream os;
    os << from << "|";
    for (int a : arrows)
        os << a << ",";
    return os.str();
}

} // namespace

Representation projective_representation(const GentlePair &g, int v) {
    const Quiver &q = g.quiver;
    PathBasis pb = enumerate_paths(g);
    std::vector<PathBasis::Path> mine;
    for (const auto &p : pb.paths)
        if (p.from == v)
            mine.push_back(p);
    Representation rep;
    rep.n = q.n;
    rep.dims.assign(q.n, 0);
    std::map<std::string, std::pair<int, int>> slot_of;
    for (const auto &p : mine)
        slot_of[path_key(p.from, p.arrows)] = {p.to, rep.dims[p.to - 1]++};
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        rep.arrow_matrix[(int)a] =
            zero_matrix(rep.dims[q.arrows[a].target - 1], rep.dims[q.arrows[a].source - 1]);
    for (const auto &p : mine) {
        for (int a : q.arrows_from(p.to)) {
            if (!p.arrows.empty() && g.in_ideal(p.arrows.back(), a))
                continue;
            std::vector<int> ext = p.arrows;
            ext.push_back(a);
            auto src = slot_of.at(path_key(p.from, p.arrows));
            auto dst = slot_of.at(path_key(p.from, ext));
            rep.arrow_matrix[a][dst.second][src.second] = Rat(1);
        }
    }
    return rep;
}

Representation injective_representation(const GentlePair &g, int v) {
    const Quiver &q = g.quiver;
    PathBasis pb = enumerate_paths(g);
    std::vector<PathBasis::Path> mine;
    for (const auto &p : pb.paths)
        if (p.to == v)
            mine.push_back(p);
    Representation rep;
    rep.n = q.n;
    rep.dims.assign(q.n, 0);
    std::map<std::string, std::pair<int, int>> slot_of;
    for (const auto &p : mine)
        slot_of[path_key(p.from, p.arrows)] = {p.from, rep.dims[p.from - 1]++};
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        rep.arrow_matrix[(int)a] =
            zero_matrix(rep.dims[q.arrows[a].target - 1], rep.dims[q.arrows[a].source - 1]);
    for (const auto &p : mine) {
        if (p.arrows.empty())
            continue;
        int a = p.arrows.front();
        std::vector<int> stripped(p.arrows.begin() + 1, p.arrows.end());
        auto src = slot_of.at(path_key(p.from, p.arrows));
        auto dst = slot_of.at(path_key(q.arrows[a].target, stripped));
        rep.arrow_matrix[a][dst.second][src.second] = Rat(1);
    }
    return rep;
}

bool representations_isomorphic(const GentlePair &g, const Representation &a,
                                const Representation &b) {
    if (a.dims != b.dims)
        return false;
    const Quiver &q = g.quiver;
    std::vector<int> block_off(q.n, 0);
    int unknowns = 0;
    for (int v = 0; v < q.n; ++v) {
        block_off[v] = unknowns;
        unknowns += a.dims[v] * a.dims[v];
    }
    if (unknowns == 0)
        return true;
    // X_t * A - B * X_s = 0, unknowns X_v[r][c]
    Matrix eqs;
    for (std::size_t ar = 0; ar < q.arrows.size(); ++ar) {
        int s = q.arrows[ar].source - 1, t = q.arrows[ar].target - 1;
        const Matrix &A = a.matrix_of((int)ar);
        const Matrix &B = b.matrix_of((int)ar);
        int ds = a.dims[s], dt = a.dims[t];
        for (int i = 0; i < dt; ++i)
            for (int j = 0; j < ds; ++j) {
                std::vector<Rat> row(unknowns);
                for (int k = 0; k < dt; ++k)
                    row[block_off[t] + i * dt + k] = row[block_off[t] + i * dt + k] + A[k][j];
                for (int k = 0; k < ds; ++k)
                    row[block_off[s] + k * ds + j] = row[block_off[s] + k * ds + j] - B[i][k];
                eqs.push_back(row);
            }
    }
    auto kern = eqs.empty() ? kernel_basis(zero_matrix(0, unknowns)) : kernel_basis(eqs);
    if (kern.empty())
        return false;
    auto invertible = [&](const std::vector<Rat> &x) {
        for (int v = 0; v < q.n; ++v) {
            int d = a.dims[v];
            if (d == 0)
                continue;
            Matrix X(d, std::vector<Rat>(d));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    X[r][c] = x[block_off[v] + r * d + c];
            if (matrix_rank(X) != d)
                return false;
        }
        return true;
    };
    for (const auto &k : kern)
        if (invertible(k))
            return true;
    // deterministic small combinations
    std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (kern.size() * 0x100000001b3ull);
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int attempt = 0; attempt < 240; ++attempt) {
        std::vector<Rat> x(unknowns);
        for (const auto &k : kern) {
            long long c = (long long)(next() % 7) - 3;
            if (c == 0)
                continue;
            for (int i = 0; i < unknowns; ++i)
                x[i] = x[i] + Rat(c) * k[i];
        }
        if (invertible(x))
            return true;
    }
    return false;
}

namespace {

struct Generator {
    int vertex = 0; // 1..n
    Vec value;      // coordinates in the module fibre at `vertex`
};

// Minimal generating set: fibre-by-fibre complement of the radical.
std::vector<Generator> minimal_generators(const GentlePair &g, const Representation &rep) {
    const Quiver &q = g.quiver;
    std::vector<Generator> gens;
    for (int v = 1; v <= q.n; ++v) {
        int d = rep.dims[v - 1];
        if (d == 0)
            continue;
        Span rad;
        for (int ar : q.arrows_into(v)) {
            const Matrix &m = rep.matrix_of(ar);
            int cols = m.empty() ? 0 : (int)m[0].size();
            for (int c = 0; c < cols; ++c) {
                Vec col(d);
                for (int r = 0; r < d; ++r)
                    col[r] = m[r][c];
                rad.add(col);
            }
        }
        for (int k = 0; k < d; ++k) {
            Vec e(d);
            e[k] = Rat(1);
            if (rad.add(e))
                gens.push_back(Generator{v, e});
        }
    }
    return gens;
}

// A projective cover of rep: for each generator, a copy of P_{vertex}.
// Basis of the cover at vertex u: pairs (generator index, path gen.vertex->u).
struct Cover {
    std::vector<Generator> gens;
    // per vertex u (1..n): list of (generator index, path arrows)
    std::vector<std::vector<std::pair<int, std::vector<int>>>> basis;
    std::vector<int> dims; // per vertex
};

Cover build_cover(const GentlePair &g, const std::vector<Generator> &gens) {
    const Quiver &q = g.quiver;
    PathBasis pb = enumerate_paths(g);
    Cover c;
    c.gens = gens;
    c.basis.assign(q.n + 1, {});
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (const auto &p : pb.paths)
            if (p.from == gens[gi].vertex)
                c.basis[p.to].push_back({(int)gi, p.arrows});
    c.dims.assign(q.n, 0);
    for (int v = 1; v <= q.n; ++v)
        c.dims[v - 1] = (int)c.basis[v].size();
    return c;
}

Vec apply_path(const GentlePair &g, const Representation &rep, const std::vector<int> &arrows,
               Vec v) {
    for (int a : arrows)
        v = matrix_vec(rep.matrix_of(a), v);
    (void)g;
    return v;
}

// Matrix of the cover map at one vertex: columns = cover basis, rows = module fibre.
Matrix cover_map_at(const GentlePair &g, const Representation &rep, const Cover &c, int v) {
    int rows = rep.dims[v - 1];
    int cols = c.dims[v - 1];
    Matrix m = zero_matrix(rows, cols);
    for (int j = 0; j < cols; ++j) {
        const auto &[gi, arrows] = c.basis[v][j];
        Vec img = apply_path(g, rep, arrows, c.gens[gi].value);
        for (int i = 0; i < rows; ++i)
            m[i][j] = img[i];
    }
    return m;
}

// Kernel of the cover map, as a representation in its own right, remembering
// the embedding into the cover.
struct KernelRep {
    Representation rep;                 // kernel with induced arrow action
    std::vector<Matrix> embed;          // per vertex: cover-coords x kernel-coords
};

// cover arrow action: (gen, p) -> (gen, p+a) when relation-free.
Matrix cover_arrow_matrix(const GentlePair &g, const Cover &c, int arrow) {
    const Quiver &q = g.quiver;
    int s = q.arrows[arrow].source, t = q.arrows[arrow].target;
    Matrix m = zero_matrix(c.dims[t - 1], c.dims[s - 1]);
    for (int j = 0; j < c.dims[s - 1]; ++j) {
        const auto &[gi, arrows] = c.basis[s][j];
        if (!arrows.empty() && g.in_ideal(arrows.back(), arrow))
            continue;
        std::vector<int> ext = arrows;
        ext.push_back(arrow);
        for (int i = 0; i < c.dims[t - 1]; ++i)
            if (c.basis[t][i].first == gi && c.basis[t][i].second == ext)
                m[i][j] = Rat(1);
    }
    return m;
}

// Solve A x = b column-wise; A must have full column rank on its span.
Matrix express_in_basis(const Matrix &basis_cols, const Matrix &vectors) {
    // least-structure exact solve via row reduction of [basis | vectors]
    int rows = (int)basis_cols.size();
    int bc = rows ? (int)basis_cols[0].size() : 0;
    int vc = vectors.empty() ? 0 : (int)vectors[0].size();
    Matrix aug = zero_matrix(rows, bc + vc);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < bc; ++j)
            aug[i][j] = basis_cols[i][j];
        for (int j = 0; j < vc; ++j)
            aug[i][bc + j] = vectors[i][j];
    }
    Matrix red = aug;
    std::vector<int> pivots = echelon(red);
    Matrix out = zero_matrix(bc, vc);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        int p = pivots[r];
        if (p >= bc)
            throw std::runtime_error("express_in_basis: vector outside span");
        for (int j = 0; j < vc; ++j)
            out[p][j] = red[r][bc + j];
    }
    return out;
}

KernelRep kernel_representation(const GentlePair &g, const Representation &rep, const Cover &c) {
    const Quiver &q = g.quiver;
    KernelRep k;
    k.rep.n = q.n;
    k.rep.dims.assign(q.n, 0);
    k.embed.assign(q.n, Matrix{});
    for (int v = 1; v <= q.n; ++v) {
        Matrix m = cover_map_at(g, rep, c, v);
        auto basis = kernel_basis(m);
        if (m.empty() && c.dims[v - 1] > 0) {
            // zero fibre in the module: everything is kernel
            basis.clear();
            for (int j = 0; j < c.dims[v - 1]; ++j) {
                Vec e(c.dims[v - 1]);
                e[j] = Rat(1);
                basis.push_back(e);
            }
        }
        k.rep.dims[v - 1] = (int)basis.size();
        Matrix emb = zero_matrix(c.dims[v - 1], (int)basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (int i = 0; i < c.dims[v - 1]; ++i)
                emb[i][j] = basis[j][i];
        k.embed[v - 1] = emb;
    }
    for (std::size_t ar = 0; ar < q.arrows.size(); ++ar) {
        int s = q.arrows[ar].source, t = q.arrows[ar].target;
        Matrix act = cover_arrow_matrix(g, c, (int)ar);
        // action restricted to the kernel, expressed in kernel coordinates
        Matrix img = matrix_product(act, k.embed[s - 1]); // cover_t x ker_s
        k.rep.arrow_matrix[(int)ar] = k.embed[t - 1].empty() && k.rep.dims[t - 1] == 0
                                          ? zero_matrix(0, k.rep.dims[s - 1])
                                          : express_in_basis(k.embed[t - 1], img);
    }
    return k;
}

struct Quotient {
    int target_dim = 0;
    int coker_dim = 0;
    std::vector<int> rep_units;  // unit-vector representatives
    Matrix project;              // coker_dim x target_dim
    Vec section(const Vec &c) const {
        Vec v(target_dim);
        for (int k = 0; k < coker_dim; ++k)
            v[rep_units[k]] = v[rep_units[k]] + c[k];
        return v;
    }
};

Quotient make_quotient(const Matrix &image_cols) {
    Quotient qt;
    int rows = (int)image_cols.size();
    qt.target_dim = rows;
    int cols = rows ? (int)image_cols[0].size() : 0;
    Span span;
    std::vector<Vec> basis_order; // image basis first, then unit representatives
    for (int j = 0; j < cols; ++j) {
        Vec col(rows);
        for (int i = 0; i < rows; ++i)
            col[i] = image_cols[i][j];
        if (span.add(col))
            basis_order.push_back(col);
    }
    int image_rank = span.dim();
    for (int i = 0; i < rows; ++i) {
        Vec e(rows);
        e[i] = Rat(1);
        if (span.add(e)) {
            basis_order.push_back(e);
            qt.rep_units.push_back(i);
        }
    }
    qt.coker_dim = rows - image_rank;
    // invert the basis matrix to project onto the complement coordinates
    Matrix B = zero_matrix(rows, rows);
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < rows; ++i)
            B[i][j] = basis_order[j][i];
    Matrix aug = zero_matrix(rows, 2 * rows);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < rows; ++j)
            aug[i][j] = B[i][j];
        aug[i][rows + i] = Rat(1);
    }
    auto pivots = echelon(aug);
    if ((int)pivots.size() != rows)
        throw std::runtime_error("make_quotient: basis not invertible");
    qt.project = zero_matrix(qt.coker_dim, rows);
    for (int k = 0; k < qt.coker_dim; ++k)
        for (int j = 0; j < rows; ++j)
            qt.project[k][j] = aug[image_rank + k][rows + j];
    return qt;
}

} // namespace

TauResult tau_homological(const GentlePair &g, const StringWord &w) {
    if (is_projective(g, w))
        throw std::runtime_error("tau_homological: module is projective");
    const Quiver &q = g.quiver;
    Representation M = string_representation(g, w);

    // minimal projective presentation P1 -> P0 -> M -> 0
    auto gens0 = minimal_generators(g, M);
    Cover p0 = build_cover(g, gens0);
    KernelRep K = kernel_representation(g, M, p0);
    auto gensK = minimal_generators(g, K.rep);
    Cover p1 = build_cover(g, gensK);

    // path matrix F[i][j]: generator j of P1 written in P0 coordinates;
    // entries are (path arrows, coefficient) with paths gens0[i].vertex -> u_j
    struct Entry {
        std::vector<int> arrows;
        Rat coeff;
    };
    std::vector<std::vector<std::vector<Entry>>> F(
        gens0.size(), std::vector<std::vector<Entry>>(gensK.size()));
    for (std::size_t j = 0; j < gensK.size(); ++j) {
        int u = gensK[j].vertex;
        Vec cover_coords = matrix_vec(K.embed[u - 1], gensK[j].value); // in P0 fibre at u
        for (std::size_t b = 0; b < p0.basis[u].size(); ++b) {
            if (cover_coords[b].is_zero())
                continue;
            const auto &[gi, arrows] = p0.basis[u][b];
            F[gi][j].push_back(Entry{arrows, cover_coords[b]});
        }
    }

    // Hom(-, Lambda): bases are paths ending at the generator vertices,
    // graded by their start; map appends F entries on the right.
    PathBasis pb = enumerate_paths(g);
    auto paths_into = [&](int v) {
        std::vector<PathBasis::Path> out;
        for (const auto &p : pb.paths)
            if (p.to == v)
                out.push_back(p);
        return out;
    };
    struct OpModule {
        // basis per start vertex: (which summand, path arrows)
        std::vector<std::vector<std::pair<int, std::vector<int>>>> basis;
        std::vector<int> dims;
    };
    auto build_op = [&](const std::vector<Generator> &gens) {
        OpModule m;
        m.basis.assign(q.n + 1, {});
        for (std::size_t gi = 0; gi < gens.size(); ++gi)
            for (const auto &p : paths_into(gens[gi].vertex))
                m.basis[p.from].push_back({(int)gi, p.arrows});
        m.dims.assign(q.n, 0);
        for (int v = 1; v <= q.n; ++v)
            m.dims[v - 1] = (int)m.basis[v].size();
        return m;
    };
    OpModule T0 = build_op(gens0); // Hom(P0, Lambda)
    OpModule T1 = build_op(gensK); // Hom(P1, Lambda)

    auto concat_ok = [&](const std::vector<int> &r, const std::vector<int> &p) {
        if (r.empty() || p.empty())
            return true;
        return !g.in_ideal(r.back(), p.front());
    };

    // image columns of Hom(P0) -> Hom(P1) per start vertex
    std::vector<Matrix> image(q.n);
    for (int v = 1; v <= q.n; ++v) {
        Matrix img = zero_matrix(T1.dims[v - 1], T0.dims[v - 1]);
        for (int cidx = 0; cidx < T0.dims[v - 1]; ++cidx) {
            const auto &[i, r] = T0.basis[v][cidx];
            for (std::size_t j = 0; j < gensK.size(); ++j) {
                for (const Entry &e : F[i][j]) {
                    if (!concat_ok(r, e.arrows))
                        continue;
                    std::vector<int> full = r;
                    full.insert(full.end(), e.arrows.begin(), e.arrows.end());
                    for (int ridx = 0; ridx < T1.dims[v - 1]; ++ridx)
                        if (T1.basis[v][ridx].first == (int)j && T1.basis[v][ridx].second == full)
                            img[ridx][cidx] = img[ridx][cidx] + e.coeff;
                }
            }
        }
        image[v - 1] = img;
    }

    // Tr M = coker, an op-representation (prepend action); tau M = its dual
    std::vector<Quotient> quot;
    for (int v = 1; v <= q.n; ++v)
        quot.push_back(make_quotient(image[v - 1]));

    TauResult res;
    res.dim.assign(q.n, 0);
    for (int v = 1; v <= q.n; ++v)
        res.dim[v - 1] = quot[v - 1].coker_dim;

    Representation tau;
    tau.n = q.n;
    tau.dims = res.dim;
    for (std::size_t ar = 0; ar < q.arrows.size(); ++ar) {
        int s = q.arrows[ar].source, t = q.arrows[ar].target;
        // op action psi: T1 graded at t -> graded at s, prepend the arrow
        Matrix psi = zero_matrix(quot[s - 1].coker_dim, quot[t - 1].coker_dim);
        for (int c = 0; c < quot[t - 1].coker_dim; ++c) {
            Vec rep_t = quot[t - 1].section([&] {
                Vec unit(quot[t - 1].coker_dim);
                unit[c] = Rat(1);
                return unit;
            }());
            // map to the fibre at s by prepending the arrow
            Vec out(T1.dims[s - 1]);
            for (int b = 0; b < T1.dims[t - 1]; ++b) {
                if (rep_t[b].is_zero())
                    continue;
                const auto &[j, r] = T1.basis[t][b];
                if (!r.empty() && g.in_ideal((int)ar, r.front()))
                    continue;
                std::vector<int> full{(int)ar};
                full.insert(full.end(), r.begin(), r.end());
                for (int ridx = 0; ridx < T1.dims[s - 1]; ++ridx)
                    if (T1.basis[s][ridx].first == j && T1.basis[s][ridx].second == full)
                        out[ridx] = out[ridx] + rep_t[b];
            }
            Vec proj = matrix_vec(quot[s - 1].project, out);
            for (int r2 = 0; r2 < quot[s - 1].coker_dim; ++r2)
                psi[r2][c] = proj[r2];
        }
        // dualize: tau_a = psi^T : tau_{s} -> tau_{t}
        Matrix taum = zero_matrix(quot[t - 1].coker_dim, quot[s - 1].coker_dim);
        for (int i = 0; i < quot[t - 1].coker_dim; ++i)
            for (int j2 = 0; j2 < quot[s - 1].coker_dim; ++j2)
                taum[i][j2] = psi[j2][i];
        tau.arrow_matrix[(int)ar] = taum;
    }

    // identify the string with this representation
    int total = std::accumulate(res.dim.begin(), res.dim.end(), 0);
    if (total == 0)
        throw std::runtime_error("tau_homological: translate vanished (input projective?)");
    for (const StringWord &cand : all_strings(g, total - 1)) {
        if (cand.length() != total - 1)
            continue;
        if (dimension_vector(q, cand) != res.dim)
            continue;
        Representation crep = string_representation(g, cand);
        if (representations_isomorphic(g, tau, crep)) {
            res.word = canonical_string_form(q, cand);
            return res;
        }
    }
    throw std::runtime_error("tau_homological: translate is not a string module");
}

} // namespace orbcc

#include "orbcc/session.hpp"

#include "orbcc/fuzz.hpp"
#include "orbcc/repmod.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbcc {

Session Session::from_text(const std::string &text) {
    Session s;
    s.tri = parse_orbifold_text(text);
    auto report = validate(s.tri);
    if (!report.ok) {
        std::ostringstream os;
        for (const auto &v : report.violations)
            os << v << "\n";
        throw ValidationError(os.str());
    }
    auto built = build_gentle_pair(s.tri);
    s.pair = built.pair;
    s.arrow_triangle = built.arrow_triangle;
    s.gen = build_generalized_quiver(s.tri);
    return s;
}

Session Session::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw OrbifoldParseError("cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

void Session::add_alias(const std::string &alias, const std::string &arrow) {
    if (pair.quiver.arrow_index(arrow) < 0)
        throw std::runtime_error("alias target '" + arrow + "' is not an arrow");
    aliases[alias] = arrow;
}

std::string Session::resolve_word_text(const std::string &text) const {
    std::istringstream is(text);
    std::ostringstream os;
    std::string tok;
    bool first = true;
    while (is >> tok) {
        std::string base = tok;
        std::string suffix;
        if (base.size() > 3 && base.substr(base.size() - 3) == "^-1") {
            suffix = "^-1";
            base = base.substr(0, base.size() - 3);
        }
        auto it = aliases.find(base);
        if (it != aliases.end())
            base = it->second;
        if (!first)
            os << " ";
        first = false;
        os << base << suffix;
    }
    return os.str();
}

StringWord Session::parse_string(const std::string &text) const {
    return parse_string_word(pair.quiver, resolve_word_text(text));
}

BandWord Session::parse_band(const std::string &text) const {
    std::string body = text;
    auto l = body.find("band(");
    if (l != std::string::npos) {
        auto r = body.rfind(')');
        if (r == std::string::npos || r < l)
            throw std::runtime_error("unbalanced band(...)");
        body = body.substr(l + 5, r - l - 5);
    }
    return parse_band_word(pair.quiver, resolve_word_text(body));
}

LabelContext Session::labels() const { return LabelContext{&tri, &arrow_triangle}; }

std::string Session::name_map() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < pair.quiver.arrows.size(); ++i) {
        const Arrow &a = pair.quiver.arrows[i];
        os << "arrow " << a.id << " : " << tri.arc_ids[a.source - 1] << " -> "
           << tri.arc_ids[a.target - 1];
        auto it = arrow_triangle.find((int)i);
        if (it != arrow_triangle.end())
            os << " (triangle " << it->second + 1 << ")";
        for (const auto &[alias, target] : aliases)
            if (target == a.id)
                os << " alias " << alias;
        os << "\n";
    }
    return os.str();
}

namespace {

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> options;
    std::set<std::string> flags;

    bool has(const std::string &f) const { return flags.count(f) > 0; }
    std::string get(const std::string &o) const {
        auto it = options.find(o);
        if (it == options.end())
            throw std::runtime_error("missing required option --" + o);
        return it->second;
    }
};

const std::set<std::string> kValueOptions = {"string", "band", "at",   "seq", "op",
                                             "side",   "dir",  "kind", "count",
                                             "max-len", "seed"};

Args parse_args(const std::vector<std::string> &argv, std::size_t from) {
    Args a;
    for (std::size_t i = from; i < argv.size(); ++i) {
        const std::string &t = argv[i];
        if (t.rfind("--", 0) == 0) {
            std::string name = t.substr(2);
            if (kValueOptions.count(name)) {
                if (i + 1 >= argv.size())
                    throw std::runtime_error("option --" + name + " needs a value");
                a.options[name] = argv[++i];
            } else {
                a.flags.insert(name);
            }
        } else {
            a.positional.push_back(t);
        }
    }
    return a;
}

std::string format_quiver_block(const Quiver &q) {
    std::ostringstream os;
    os << "vertices: " << q.n << "\n";
    std::vector<std::string> names;
    for (const auto &a : q.arrows)
        names.push_back(std::to_string(a.source) + ">" + std::to_string(a.target));
    std::sort(names.begin(), names.end());
    os << "arrows:";
    for (const auto &n : names)
        os << " " << n;
    os << "\n";
    return os.str();
}

std::string format_gentle(const GentlePair &g) {
    std::ostringstream os;
    os << "vertices: " << g.quiver.n << "\n";
    os << "arrows:";
    for (const auto &a : g.quiver.arrows)
        os << " " << a.id;
    os << "\nrelations:";
    for (auto [a, b] : g.relations)
        os << " " << g.quiver.arrows[a].id << "*" << g.quiver.arrows[b].id;
    os << "\n";
    return os.str();
}

std::string format_generalized(const GeneralizedClusterQuiver &g) {
    std::ostringstream os;
    os << format_quiver_block(g.quiver);
    os << "pending:";
    for (int v : g.pending)
        os << " " << v;
    os << "\n";
    return os.str();
}

std::string bits(const std::vector<int> &h) {
    std::string s;
    for (int v : h)
        s += char('0' + v);
    return s;
}

struct WordArg {
    bool is_band = false;
    StringWord str;
    BandWord band;
};

WordArg parse_word_arg(const Session &s, const Args &a) {
    WordArg w;
    bool has_string = a.options.count("string") > 0;
    bool has_band = a.options.count("band") > 0;
    if (has_string == has_band)
        throw std::runtime_error("exactly one of --string or --band is required");
    if (has_string) {
        w.str = s.parse_string(a.get("string"));
        if (auto err = validate_string(s.pair, w.str))
            throw ValidationError("not a valid string: " + *err);
    } else {
        w.is_band = true;
        w.band = s.parse_band(a.get("band"));
        if (auto err = validate_band(s.pair, w.band))
            throw ValidationError("not a valid band: " + *err);
    }
    return w;
}

RunResult cmd_validate(Session &s, const Args &) {
    auto report = validate(s.tri);
    std::ostringstream os;
    os << "ok: " << s.tri.triangles.size() << " triangles, types (";
    for (std::size_t i = 0; i < report.triangle_types.size(); ++i)
        os << (i ? "," : "") << report.triangle_types[i];
    os << ")\n";
    return {StatusOk, os.str()};
}

RunResult cmd_quiver(Session &s, const Args &a) {
    std::ostringstream os;
    if (a.has("cmatrix"))
        os << format_matrix(c_matrix_principal(s.pair.quiver)) << "\n";
    else if (a.has("generalized"))
        os << format_generalized(s.gen);
    else
        os << format_gentle(s.pair);
    return {StatusOk, os.str()};
}

RunResult cmd_mutate(Session &s, const Args &a) {
    int k = std::stoi(a.get("at"));
    GeneralizedClusterQuiver q = mutate(s.gen, k);
    if (a.options.count("seq")) {
        std::istringstream is(a.get("seq"));
        std::string tok;
        while (std::getline(is, tok, ','))
            q = mutate(q, std::stoi(tok));
    }
    return {StatusOk, format_generalized(q)};
}

RunResult cmd_expand(Session &s, const Args &a) {
    WordArg w = parse_word_arg(s, a);
    std::optional<LabelContext> lc;
    if (a.has("labels"))
        lc = s.labels();
    LaurentPolynomial p = w.is_band ? snake_expansion(s.pair, w.band, lc)
                                    : snake_expansion(s.pair, w.str, lc);
    if (a.has("coefficient-free"))
        p = p.specialize_y_to_one();
    return {StatusOk, p.canonical_text() + "\n"};
}

RunResult cmd_cc(Session &s, const Args &a) {
    WordArg w = parse_word_arg(s, a);
    LaurentPolynomial p = w.is_band ? cc_prin(s.pair, w.band) : cc_prin(s.pair, w.str);
    if (a.has("coefficient-free"))
        p = p.specialize_y_to_one();
    return {StatusOk, p.canonical_text() + "\n"};
}

RunResult cmd_verify(Session &s, const Args &a) {
    WordArg w = parse_word_arg(s, a);
    VerifyResult r = w.is_band ? verify_cc_equals_expansion(s.pair, w.band, s.labels())
                               : verify_cc_equals_expansion(s.pair, w.str, s.labels());
    if (r.ok)
        return {StatusOk, "verify: ok\n"};
    return {StatusMismatch, "verify: MISMATCH\n" + r.diff};
}

RunResult cmd_lattice(Session &s, const Args &a) {
    WordArg w = parse_word_arg(s, a);
    std::ostringstream os;
    const Quiver &q = s.pair.quiver;
    auto emit = [&](const SnakeGraph &graph, const FencePoset &poset, const auto &edges_of) {
        for (const auto &h : enumerate_heights(poset)) {
            os << "h=" << bits(h) << " arc=" << format_int_vector(height_to_arc_vector(
                                                    graph, h, q.n));
            if (a.has("edges")) {
                os << " edges=[";
                bool first = true;
                for (const EdgeKey &k : edges_of(h)) {
                    os << (first ? "" : " ") << edge_key_name(k);
                    first = false;
                }
                os << "]";
            }
            os << "\n";
        }
    };
    if (w.is_band) {
        BandBuild bb = build_band_graph(s.pair, w.band);
        emit(bb.graph.snake, fence_poset(bb.graph),
             [&](const std::vector<int> &h) { return matching_edges(bb.graph, h); });
    } else {
        SnakeGraph graph = build_snake_graph(q, w.str);
        emit(graph, fence_poset(graph),
             [&](const std::vector<int> &h) { return matching_edges(graph, h); });
    }
    return {StatusOk, os.str()};
}

RunResult cmd_grassmannian(Session &s, const Args &a) {
    WordArg w = parse_word_arg(s, a);
    auto table = w.is_band ? euler_char_table(s.pair.quiver, w.band)
                           : euler_char_table(s.pair.quiver, w.str);
    std::ostringstream os;
    for (const auto &[e, chi] : table)
        os << "e=" << format_int_vector(e) << " chi=" << chi << "\n";
    return {StatusOk, os.str()};
}

Side parse_side(const std::string &s) {
    if (s == "start")
        return Side::Start;
    if (s == "end")
        return Side::End;
    throw std::runtime_error("--side must be start or end");
}

RunResult cmd_strings(Session &s, const Args &a) {
    std::string op = a.get("op");
    const Quiver &q = s.pair.quiver;
    std::ostringstream os;
    StringWord w = s.parse_string(a.get("string"));
    if (auto err = validate_string(s.pair, w))
        throw ValidationError("not a valid string: " + *err);
    if (op == "classify") {
        auto cls = classify_positions(s.pair, w);
        for (std::size_t p = 0; p < cls.positions.size(); ++p) {
            const auto &info = cls.positions[p];
            os << "pos " << p + 1 << ": vertex " << info.vertex;
            if (info.strict)
                os << " strict";
            if (info.peak && info.deep)
                os << " peak deep";
            else if (info.peak)
                os << " peak";
            else if (info.deep)
                os << " deep";
            else
                os << " slope";
            os << "\n";
        }
        auto tag = [](bool peak, bool deep) {
            if (peak && deep)
                return "peak deep";
            if (peak)
                return "peak";
            if (deep)
                return "deep";
            return "neither";
        };
        os << "start: " << tag(cls.starts_on_peak, cls.starts_on_deep) << "\n";
        os << "end: " << tag(cls.ends_on_peak, cls.ends_on_deep) << "\n";
    } else if (op == "hook" || op == "cohook") {
        Side side = parse_side(a.get("side"));
        std::string kind = a.get("kind");
        HookKind hk;
        if (kind == "add")
            hk = op == "hook" ? HookKind::AddHook : HookKind::AddCohook;
        else if (kind == "remove")
            hk = op == "hook" ? HookKind::RemoveHook : HookKind::RemoveCohook;
        else
            throw std::runtime_error("--kind must be add or remove");
        auto r = hook_op(s.pair, w, side, hk);
        os << "result: " << (r ? format_word(q, *r) : "0") << "\n";
    } else if (op == "rotate") {
        Side side = parse_side(a.get("side"));
        std::string d = a.get("dir");
        if (d != "plus" && d != "minus")
            throw std::runtime_error("--dir must be plus or minus");
        auto r = rotate(s.pair, w, side, d == "plus" ? RotateDir::Plus : RotateDir::Minus);
        os << "result: " << (r ? format_word(q, *r) : "empty-arc") << "\n";
    } else if (op == "ar") {
        os << "result: " << format_word(q, ar_translate(s.pair, w)) << "\n";
    } else if (op == "ar-inv") {
        os << "result: " << format_word(q, ar_translate_inverse(s.pair, w)) << "\n";
    } else {
        throw std::runtime_error("unknown strings op '" + op + "'");
    }
    return {StatusOk, os.str()};
}

RunResult cmd_fuzz(Session &s, const Args &a) {
    FuzzOptions opt;
    if (a.options.count("count"))
        opt.count = std::stoi(a.get("count"));
    if (a.options.count("max-len"))
        opt.max_len = std::stoi(a.get("max-len"));
    if (a.options.count("seed"))
        opt.seed = std::stoull(a.get("seed"));
    auto lc = s.labels();
    FuzzSummary sum = fuzz_pair(s.pair, lc, opt);
    std::ostringstream os;
    os << "fuzz: " << sum.cases << " cases (" << sum.strings << " strings, " << sum.bands
       << " bands), " << sum.failures.size() << " failures\n";
    for (const auto &f : sum.failures)
        os << "FAIL " << f << "\n";
    return {sum.failures.empty() ? StatusOk : StatusValidation, os.str()};
}

} // namespace

RunResult run_command(Session &s, const std::vector<std::string> &argv) {
    if (argv.empty())
        return {StatusParse, "no command given\n"};
    try {
        Args a = parse_args(argv, 1);
        const std::string &cmd = argv[0];
        if (cmd == "validate")
            return cmd_validate(s, a);
        if (cmd == "quiver")
            return cmd_quiver(s, a);
        if (cmd == "mutate")
            return cmd_mutate(s, a);
        if (cmd == "expand")
            return cmd_expand(s, a);
        if (cmd == "cc")
            return cmd_cc(s, a);
        if (cmd == "verify")
            return cmd_verify(s, a);
        if (cmd == "lattice")
            return cmd_lattice(s, a);
        if (cmd == "grassmannian")
            return cmd_grassmannian(s, a);
        if (cmd == "strings")
            return cmd_strings(s, a);
        if (cmd == "fuzz")
            return cmd_fuzz(s, a);
        if (cmd == "name-map")
            return {StatusOk, s.name_map()};
        return {StatusParse, "unknown command '" + cmd + "'\n"};
    } catch (const ValidationError &e) {
        return {StatusValidation, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception &e) {
        return {StatusParse, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace orbcc

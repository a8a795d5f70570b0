#include "orbcc/strings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbcc {

namespace {

// Guard for maximal-path walks; gentle pairs used here are finite
// dimensional, so a path can never repeat an arrow.
constexpr int kMaxCompletion = 4096;

} // namespace

bool StringWord::operator==(const StringWord &o) const {
    if (letters.empty() && o.letters.empty())
        return trivial_vertex == o.trivial_vertex;
    return letters == o.letters;
}

int letter_source(const Quiver &q, const Letter &l) {
    const Arrow &a = q.arrows[l.arrow];
    return l.inverse ? a.target : a.source;
}

int letter_target(const Quiver &q, const Letter &l) {
    const Arrow &a = q.arrows[l.arrow];
    return l.inverse ? a.source : a.target;
}

Letter letter_inverse(const Letter &l) { return Letter{l.arrow, !l.inverse}; }

StringWord word_inverse(const Quiver &q, const StringWord &w) {
    if (w.is_trivial())
        return w;
    (void)q;
    StringWord r;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(letter_inverse(*it));
    return r;
}

BandWord band_inverse(const BandWord &w) {
    BandWord r;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(letter_inverse(*it));
    return r;
}

std::vector<int> word_positions(const Quiver &q, const StringWord &w) {
    if (w.is_trivial())
        return {w.trivial_vertex};
    std::vector<int> p;
    for (const Letter &l : w.letters)
        p.push_back(letter_source(q, l));
    p.push_back(letter_target(q, w.letters.back()));
    return p;
}

std::vector<int> band_positions(const Quiver &q, const BandWord &w) {
    std::vector<int> p;
    for (const Letter &l : w.letters)
        p.push_back(letter_source(q, l));
    return p;
}

namespace {

// A two-letter window (l1 then l2), assumed to connect as a walk.
bool window_ok(const GentlePair &g, const Letter &l1, const Letter &l2) {
    if (l1.arrow == l2.arrow && l1.inverse != l2.inverse)
        return false; // formal inverse adjacency
    if (!l1.inverse && !l2.inverse && g.in_ideal(l1.arrow, l2.arrow))
        return false;
    if (l1.inverse && l2.inverse && g.in_ideal(l2.arrow, l1.arrow))
        return false;
    return true;
}

std::string letter_name(const Quiver &q, const Letter &l) {
    return q.arrows[l.arrow].id + (l.inverse ? "^-1" : "");
}

std::optional<std::string> check_window(const GentlePair &g, const Letter &l1,
                                        const Letter &l2, int index) {
    const Quiver &q = g.quiver;
    if (letter_target(q, l1) != letter_source(q, l2))
        return "letters " + std::to_string(index) + "," + std::to_string(index + 1) + " (" +
               letter_name(q, l1) + "," + letter_name(q, l2) + ") do not compose as a walk";
    if (l1.arrow == l2.arrow && l1.inverse != l2.inverse)
        return "letter " + std::to_string(index + 1) + " is the formal inverse of letter " +
               std::to_string(index);
    if (!window_ok(g, l1, l2))
        return "window (" + letter_name(q, l1) + "," + letter_name(q, l2) +
               ") at position " + std::to_string(index) + " is a relation";
    return std::nullopt;
}

} // namespace

std::optional<std::string> validate_string(const GentlePair &g, const StringWord &w) {
    const Quiver &q = g.quiver;
    if (w.is_trivial()) {
        if (w.trivial_vertex < 1 || w.trivial_vertex > q.n)
            return "trivial string vertex out of range";
        return std::nullopt;
    }
    for (const Letter &l : w.letters)
        if (l.arrow < 0 || l.arrow >= (int)q.arrows.size())
            return "letter references unknown arrow";
    for (int i = 0; i + 1 < (int)w.letters.size(); ++i)
        if (auto err = check_window(g, w.letters[i], w.letters[i + 1], i + 1))
            return err;
    return std::nullopt;
}

std::optional<std::string> validate_band(const GentlePair &g, const BandWord &w) {
    const Quiver &q = g.quiver;
    const int m = w.length();
    if (m < 2)
        return "band must have at least two letters";
    for (const Letter &l : w.letters)
        if (l.arrow < 0 || l.arrow >= (int)q.arrows.size())
            return "letter references unknown arrow";
    for (int i = 0; i < m; ++i)
        if (auto err = check_window(g, w.letters[i], w.letters[(i + 1) % m], i + 1))
            return err;
    bool has_direct = false, has_inverse = false;
    for (const Letter &l : w.letters)
        (l.inverse ? has_inverse : has_direct) = true;
    if (!has_direct || !has_inverse)
        return "band must contain both a direct and an inverse letter";
    for (int d = 1; d < m; ++d) {
        if (m % d != 0)
            continue;
        bool periodic = true;
        for (int i = 0; i < m && periodic; ++i)
            if (!(w.letters[i] == w.letters[(i + d) % m]))
                periodic = false;
        if (periodic)
            return "band is a proper power of a shorter word (period " + std::to_string(d) + ")";
    }
    return std::nullopt;
}

namespace {

// Arrows a such that the direct letter a can be prepended (a * w is a string).
std::vector<int> prepend_direct_candidates(const GentlePair &g, const StringWord &w) {
    const Quiver &q = g.quiver;
    int start = w.is_trivial() ? w.trivial_vertex : letter_source(q, w.letters.front());
    std::vector<int> out;
    for (int a : q.arrows_into(start)) {
        Letter cand{a, false};
        if (w.is_trivial() || window_ok(g, cand, w.letters.front()))
            out.push_back(a);
    }
    return out;
}

std::vector<int> prepend_inverse_candidates(const GentlePair &g, const StringWord &w) {
    const Quiver &q = g.quiver;
    int start = w.is_trivial() ? w.trivial_vertex : letter_source(q, w.letters.front());
    std::vector<int> out;
    for (int a : q.arrows_from(start)) {
        Letter cand{a, true};
        if (w.is_trivial() || window_ok(g, cand, w.letters.front()))
            out.push_back(a);
    }
    return out;
}

std::vector<int> append_direct_candidates(const GentlePair &g, const StringWord &w) {
    const Quiver &q = g.quiver;
    int end = w.is_trivial() ? w.trivial_vertex : letter_target(q, w.letters.back());
    std::vector<int> out;
    for (int a : q.arrows_from(end)) {
        Letter cand{a, false};
        if (w.is_trivial() || window_ok(g, w.letters.back(), cand))
            out.push_back(a);
    }
    return out;
}

std::vector<int> append_inverse_candidates(const GentlePair &g, const StringWord &w) {
    const Quiver &q = g.quiver;
    int end = w.is_trivial() ? w.trivial_vertex : letter_target(q, w.letters.back());
    std::vector<int> out;
    for (int a : q.arrows_into(end)) {
        Letter cand{a, true};
        if (w.is_trivial() || window_ok(g, w.letters.back(), cand))
            out.push_back(a);
    }
    return out;
}

StringWord with_prepended(const StringWord &w, const Letter &l) {
    StringWord r;
    r.letters.push_back(l);
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

StringWord with_appended(const StringWord &w, const Letter &l) {
    StringWord r = w;
    if (r.is_trivial())
        r.trivial_vertex = 0;
    r.letters.push_back(l);
    return r;
}

// Greedily prepend inverse (resp. direct) letters; uniqueness is forced by
// gentleness.
StringWord complete_inverse_prefix(const GentlePair &g, StringWord w) {
    for (int guard = 0; guard < kMaxCompletion; ++guard) {
        auto cands = prepend_inverse_candidates(g, w);
        if (cands.empty())
            return w;
        w = with_prepended(w, Letter{cands.front(), true});
    }
    throw std::runtime_error("hook completion did not terminate (algebra not finite dimensional?)");
}

StringWord complete_direct_prefix(const GentlePair &g, StringWord w) {
    for (int guard = 0; guard < kMaxCompletion; ++guard) {
        auto cands = prepend_direct_candidates(g, w);
        if (cands.empty())
            return w;
        w = with_prepended(w, Letter{cands.front(), false});
    }
    throw std::runtime_error("hook completion did not terminate (algebra not finite dimensional?)");
}

StringWord complete_direct_suffix(const GentlePair &g, StringWord w) {
    for (int guard = 0; guard < kMaxCompletion; ++guard) {
        auto cands = append_direct_candidates(g, w);
        if (cands.empty())
            return w;
        w = with_appended(w, Letter{cands.front(), false});
    }
    throw std::runtime_error("hook completion did not terminate (algebra not finite dimensional?)");
}

StringWord complete_inverse_suffix(const GentlePair &g, StringWord w) {
    for (int guard = 0; guard < kMaxCompletion; ++guard) {
        auto cands = append_inverse_candidates(g, w);
        if (cands.empty())
            return w;
        w = with_appended(w, Letter{cands.front(), true});
    }
    throw std::runtime_error("hook completion did not terminate (algebra not finite dimensional?)");
}

// For trivial strings the start- and end-side operations must pick distinct
// arrows when two candidates exist; start ops take the first candidate and
// end ops the last.
int pick_candidate(const std::vector<int> &cands, bool end_side) {
    return end_side ? cands.back() : cands.front();
}

} // namespace

StringClassification classify_positions(const GentlePair &g, const StringWord &w) {
    const Quiver &q = g.quiver;
    StringClassification r;
    r.starts_on_peak = prepend_direct_candidates(g, w).empty();
    r.starts_on_deep = prepend_inverse_candidates(g, w).empty();
    r.ends_on_peak = append_inverse_candidates(g, w).empty();
    r.ends_on_deep = append_direct_candidates(g, w).empty();
    auto pos = word_positions(q, w);
    const int m = w.length();
    for (int p = 1; p <= m + 1; ++p) {
        PositionInfo info;
        info.vertex = pos[p - 1];
        if (m == 0) {
            info.peak = info.deep = true; // vacuous endpoint conditions
        } else if (p == 1) {
            info.peak = !w.letters.front().inverse;
            info.deep = w.letters.front().inverse;
        } else if (p == m + 1) {
            info.peak = w.letters.back().inverse;
            info.deep = !w.letters.back().inverse;
        } else {
            bool prev_dir = !w.letters[p - 2].inverse;
            bool next_dir = !w.letters[p - 1].inverse;
            info.peak = !prev_dir && next_dir;
            info.deep = prev_dir && !next_dir;
            info.strict = info.peak || info.deep;
        }
        r.positions.push_back(info);
    }
    return r;
}

std::vector<PositionInfo> classify_band_positions(const GentlePair &g, const BandWord &w) {
    const Quiver &q = g.quiver;
    std::vector<PositionInfo> out;
    const int m = w.length();
    auto pos = band_positions(q, w);
    for (int p = 0; p < m; ++p) {
        const Letter &prev = w.letters[(p + m - 1) % m];
        const Letter &next = w.letters[p];
        PositionInfo info;
        info.vertex = pos[p];
        info.peak = prev.inverse && !next.inverse;
        info.deep = !prev.inverse && next.inverse;
        info.strict = info.peak || info.deep;
        out.push_back(info);
    }
    (void)g;
    return out;
}

namespace {

std::optional<StringWord> remove_hook_start(const Quiver &q, const StringWord &w) {
    int j = -1;
    for (int i = 0; i < w.length(); ++i)
        if (!w.letters[i].inverse) {
            j = i;
            break;
        }
    if (j < 0)
        return std::nullopt; // inverse string (or trivial): zero marker
    StringWord r;
    if (j + 1 == w.length())
        return StringWord::trivial(letter_target(q, w.letters[j]));
    r.letters.assign(w.letters.begin() + j + 1, w.letters.end());
    return r;
}

std::optional<StringWord> remove_cohook_start(const Quiver &q, const StringWord &w) {
    int j = -1;
    for (int i = 0; i < w.length(); ++i)
        if (w.letters[i].inverse) {
            j = i;
            break;
        }
    if (j < 0)
        return std::nullopt; // direct string: zero marker
    if (j + 1 == w.length())
        return StringWord::trivial(letter_target(q, w.letters[j]));
    StringWord r;
    r.letters.assign(w.letters.begin() + j + 1, w.letters.end());
    return r;
}

std::optional<StringWord> remove_hook_end(const Quiver &q, const StringWord &w) {
    int j = -1;
    for (int i = w.length() - 1; i >= 0; --i)
        if (w.letters[i].inverse) {
            j = i;
            break;
        }
    if (j < 0)
        return std::nullopt;
    if (j == 0)
        return StringWord::trivial(letter_source(q, w.letters[0]));
    StringWord r;
    r.letters.assign(w.letters.begin(), w.letters.begin() + j);
    return r;
}

std::optional<StringWord> remove_cohook_end(const Quiver &q, const StringWord &w) {
    int j = -1;
    for (int i = w.length() - 1; i >= 0; --i)
        if (!w.letters[i].inverse) {
            j = i;
            break;
        }
    if (j < 0)
        return std::nullopt;
    if (j == 0)
        return StringWord::trivial(letter_source(q, w.letters[0]));
    StringWord r;
    r.letters.assign(w.letters.begin(), w.letters.begin() + j);
    return r;
}

StringWord add_hook_start(const GentlePair &g, const StringWord &w) {
    auto cands = prepend_direct_candidates(g, w);
    if (cands.empty())
        throw std::runtime_error("add_hook(start): string starts on a peak");
    StringWord r = with_prepended(w, Letter{pick_candidate(cands, false), false});
    return complete_inverse_prefix(g, r);
}

StringWord add_cohook_start(const GentlePair &g, const StringWord &w) {
    auto cands = prepend_inverse_candidates(g, w);
    if (cands.empty())
        throw std::runtime_error("add_cohook(start): string starts on a deep");
    StringWord r = with_prepended(w, Letter{pick_candidate(cands, false), true});
    return complete_direct_prefix(g, r);
}

StringWord add_hook_end(const GentlePair &g, const StringWord &w) {
    auto cands = append_inverse_candidates(g, w);
    if (cands.empty())
        throw std::runtime_error("add_hook(end): string ends on a peak");
    StringWord r = with_appended(w, Letter{pick_candidate(cands, w.is_trivial()), true});
    return complete_direct_suffix(g, r);
}

StringWord add_cohook_end(const GentlePair &g, const StringWord &w) {
    auto cands = append_direct_candidates(g, w);
    if (cands.empty())
        throw std::runtime_error("add_cohook(end): string ends on a deep");
    StringWord r = with_appended(w, Letter{pick_candidate(cands, w.is_trivial()), false});
    return complete_inverse_suffix(g, r);
}

} // namespace

std::optional<StringWord> hook_op(const GentlePair &g, const StringWord &w, Side side,
                                  HookKind kind) {
    const Quiver &q = g.quiver;
    if (auto err = validate_string(g, w))
        throw std::runtime_error("hook_op: invalid string: " + *err);
    if (side == Side::Start) {
        switch (kind) {
        case HookKind::AddHook: return add_hook_start(g, w);
        case HookKind::AddCohook: return add_cohook_start(g, w);
        case HookKind::RemoveHook: return remove_hook_start(q, w);
        case HookKind::RemoveCohook: return remove_cohook_start(q, w);
        }
    } else {
        switch (kind) {
        case HookKind::AddHook: return add_hook_end(g, w);
        case HookKind::AddCohook: return add_cohook_end(g, w);
        case HookKind::RemoveHook: return remove_hook_end(q, w);
        case HookKind::RemoveCohook: return remove_cohook_end(q, w);
        }
    }
    throw std::runtime_error("hook_op: bad arguments");
}

namespace {

bool is_direct_word(const StringWord &w) {
    for (const Letter &l : w.letters)
        if (l.inverse)
            return false;
    return true; // trivial counts as direct
}

bool is_inverse_word(const StringWord &w) {
    for (const Letter &l : w.letters)
        if (!l.inverse)
            return false;
    return true;
}

} // namespace

std::optional<StringWord> rotate(const GentlePair &g, const StringWord &w, Side side,
                                 RotateDir dir) {
    auto cls = classify_positions(g, w);
    if (side == Side::Start) {
        if (dir == RotateDir::Plus) {
            if (!cls.starts_on_peak)
                return add_hook_start(g, w);
            if (!is_direct_word(w))
                return remove_cohook_start(g.quiver, w);
            return std::nullopt;
        }
        if (!cls.starts_on_deep)
            return add_cohook_start(g, w);
        if (!is_inverse_word(w))
            return remove_hook_start(g.quiver, w);
        return std::nullopt;
    }
    if (dir == RotateDir::Plus) {
        if (!cls.ends_on_peak)
            return add_hook_end(g, w);
        if (!is_inverse_word(w))
            return remove_cohook_end(g.quiver, w);
        return std::nullopt;
    }
    if (!cls.ends_on_deep)
        return add_cohook_end(g, w);
    if (!is_direct_word(w))
        return remove_hook_end(g.quiver, w);
    return std::nullopt;
}

namespace {

// The two-sided hook/cohook surgery behind the AR translate.  For trivial
// strings the side operations must be chained (the first changes the other
// side's peak/deep test); otherwise both sides are decided on the original
// word and spliced.
StringWord two_sided(const GentlePair &g, const StringWord &w, bool use_deep_tests) {
    const Quiver &q = g.quiver;
    auto start_decide = [&](const StringWord &u) {
        auto cls = classify_positions(g, u);
        return use_deep_tests ? cls.starts_on_deep : cls.starts_on_peak;
    };
    auto end_decide = [&](const StringWord &u) {
        auto cls = classify_positions(g, u);
        return use_deep_tests ? cls.ends_on_deep : cls.ends_on_peak;
    };
    auto start_apply = [&](const StringWord &u) -> std::optional<StringWord> {
        if (start_decide(u))
            return use_deep_tests ? remove_hook_start(q, u) : remove_cohook_start(q, u);
        return use_deep_tests ? add_cohook_start(g, u) : add_hook_start(g, u);
    };
    auto end_apply = [&](const StringWord &u) -> std::optional<StringWord> {
        if (end_decide(u))
            return use_deep_tests ? remove_hook_end(q, u) : remove_cohook_end(q, u);
        return use_deep_tests ? add_cohook_end(g, u) : add_hook_end(g, u);
    };

    if (w.is_trivial()) {
        auto mid = start_apply(w);
        if (!mid)
            throw std::runtime_error("ar translate: side operation vanished on trivial string");
        auto out = end_apply(*mid);
        if (!out)
            throw std::runtime_error("ar translate: side operation vanished");
        return *out;
    }

    const int m = w.length();
    bool start_removes = start_decide(w);
    bool end_removes = end_decide(w);

    // prefix letters (additions) or cut index for removals
    std::vector<Letter> prefix, suffix;
    int lo = 1, hi = m; // surviving letter range, 1-based
    if (start_removes) {
        int j = -1;
        for (int i = 0; i < m; ++i) {
            bool hit = use_deep_tests ? !w.letters[i].inverse : w.letters[i].inverse;
            if (hit) {
                j = i + 1;
                break;
            }
        }
        if (j < 0)
            throw std::runtime_error("ar translate: start removal vanished");
        lo = j + 1;
    } else {
        StringWord added = use_deep_tests ? add_cohook_start(g, w) : add_hook_start(g, w);
        prefix.assign(added.letters.begin(), added.letters.end() - m);
    }
    if (end_removes) {
        int j = -1;
        for (int i = m - 1; i >= 0; --i) {
            bool hit = use_deep_tests ? w.letters[i].inverse : !w.letters[i].inverse;
            if (hit) {
                j = i + 1;
                break;
            }
        }
        if (j < 0)
            throw std::runtime_error("ar translate: end removal vanished");
        hi = j - 1;
    } else {
        StringWord added = use_deep_tests ? add_cohook_end(g, w) : add_hook_end(g, w);
        suffix.assign(added.letters.begin() + m, added.letters.end());
    }

    if (lo > hi + 1)
        throw std::runtime_error("ar translate: side removals crossed (input projective/injective?)");

    StringWord out;
    out.letters = prefix;
    for (int i = lo; i <= hi; ++i)
        out.letters.push_back(w.letters[i - 1]);
    out.letters.insert(out.letters.end(), suffix.begin(), suffix.end());
    if (out.letters.empty()) {
        auto pos = word_positions(q, w);
        out = StringWord::trivial(pos[lo - 1]);
    }
    if (auto err = validate_string(g, out))
        throw std::runtime_error("ar translate: produced invalid string: " + *err);
    return out;
}

} // namespace

StringWord ar_translate(const GentlePair &g, const StringWord &w) {
    if (is_projective(g, w))
        throw std::runtime_error("ar_translate: module is projective");
    return two_sided(g, w, /*use_deep_tests=*/true);
}

StringWord ar_translate_inverse(const GentlePair &g, const StringWord &w) {
    if (is_injective(g, w))
        throw std::runtime_error("ar_translate_inverse: module is injective");
    return two_sided(g, w, /*use_deep_tests=*/false);
}

namespace {

// Maximal relation-free direct path starting with arrow a, as arrow indices.
std::vector<int> maximal_path_from(const GentlePair &g, int a) {
    std::vector<int> path{a};
    for (int guard = 0; guard < kMaxCompletion; ++guard) {
        int tail = path.back();
        int next = -1;
        for (int c : g.quiver.arrows_from(g.quiver.arrows[tail].target))
            if (!g.in_ideal(tail, c)) {
                next = c;
                break;
            }
        if (next < 0)
            return path;
        path.push_back(next);
    }
    throw std::runtime_error("maximal path did not terminate (algebra not finite dimensional?)");
}

// Maximal relation-free direct path ending with arrow a.
std::vector<int> maximal_path_into(const GentlePair &g, int a) {
    std::vector<int> path{a};
    for (int guard = 0; guard < kMaxCompletion; ++guard) {
        int head = path.front();
        int prev = -1;
        for (int c : g.quiver.arrows_into(g.quiver.arrows[head].source))
            if (!g.in_ideal(c, head)) {
                prev = c;
                break;
            }
        if (prev < 0)
            return path;
        path.insert(path.begin(), prev);
    }
    throw std::runtime_error("maximal path did not terminate (algebra not finite dimensional?)");
}

} // namespace

StringWord projective_string(const GentlePair &g, int v) {
    auto outs = g.quiver.arrows_from(v);
    if (outs.empty())
        return StringWord::trivial(v);
    std::vector<int> p = maximal_path_from(g, outs[0]);
    if (outs.size() == 1) {
        StringWord r;
        for (int a : p)
            r.letters.push_back(Letter{a, false});
        return r;
    }
    std::vector<int> qpath = maximal_path_from(g, outs[1]);
    StringWord r; // p^-1 q
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r.letters.push_back(Letter{*it, true});
    for (int a : qpath)
        r.letters.push_back(Letter{a, false});
    return r;
}

StringWord injective_string(const GentlePair &g, int v) {
    auto ins = g.quiver.arrows_into(v);
    if (ins.empty())
        return StringWord::trivial(v);
    std::vector<int> p = maximal_path_into(g, ins[0]);
    if (ins.size() == 1) {
        StringWord r;
        for (int a : p)
            r.letters.push_back(Letter{a, false});
        return r;
    }
    std::vector<int> qpath = maximal_path_into(g, ins[1]);
    StringWord r; // p q^-1
    for (int a : p)
        r.letters.push_back(Letter{a, false});
    for (auto it = qpath.rbegin(); it != qpath.rend(); ++it)
        r.letters.push_back(Letter{*it, true});
    return r;
}

StringWord canonical_string_form(const Quiver &q, const StringWord &w) {
    if (w.is_trivial())
        return w;
    StringWord inv = word_inverse(q, w);
    auto key = [](const StringWord &u) {
        std::vector<std::pair<int, int>> k;
        for (const Letter &l : u.letters)
            k.push_back({l.arrow, l.inverse ? 1 : 0});
        return k;
    };
    return key(w) <= key(inv) ? w : inv;
}

bool is_projective(const GentlePair &g, const StringWord &w) {
    StringWord cw = canonical_string_form(g.quiver, w);
    for (int v = 1; v <= g.quiver.n; ++v)
        if (canonical_string_form(g.quiver, projective_string(g, v)) == cw)
            return true;
    return false;
}

bool is_injective(const GentlePair &g, const StringWord &w) {
    StringWord cw = canonical_string_form(g.quiver, w);
    for (int v = 1; v <= g.quiver.n; ++v)
        if (canonical_string_form(g.quiver, injective_string(g, v)) == cw)
            return true;
    return false;
}

std::vector<StringWord> irreducible_targets(const GentlePair &g, const StringWord &w) {
    std::vector<StringWord> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    auto key = [](const StringWord &u) {
        std::vector<std::pair<int, int>> k{{-1, u.is_trivial() ? u.trivial_vertex : 0}};
        for (const Letter &l : u.letters)
            k.push_back({l.arrow, l.inverse ? 1 : 0});
        return k;
    };
    for (Side side : {Side::Start, Side::End}) {
        auto r = rotate(g, w, side, RotateDir::Plus);
        if (!r)
            continue;
        StringWord c = canonical_string_form(g.quiver, *r);
        if (seen.insert(key(c)).second)
            out.push_back(c);
    }
    return out;
}

BandWord band_canonical_form(const Quiver &q, const BandWord &w) {
    (void)q;
    const int m = w.length();
    auto key = [](const BandWord &u) {
        std::vector<std::pair<int, int>> k;
        for (const Letter &l : u.letters)
            k.push_back({l.arrow, l.inverse ? 1 : 0});
        return k;
    };
    BandWord best = w;
    auto best_key = key(w);
    for (const BandWord &base : {w, band_inverse(w)}) {
        for (int s = 0; s < m; ++s) {
            BandWord rot;
            for (int i = 0; i < m; ++i)
                rot.letters.push_back(base.letters[(s + i) % m]);
            auto k = key(rot);
            if (k < best_key) {
                best_key = k;
                best = rot;
            }
        }
    }
    return best;
}

std::vector<StringWord> all_strings(const GentlePair &g, int max_len) {
    // Right-extensions from the trivial seeds reach every valid word exactly
    // once; the output is deduplicated up to inversion.
    std::vector<StringWord> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    auto key = [](const StringWord &u) {
        std::vector<std::pair<int, int>> k{{-1, u.is_trivial() ? u.trivial_vertex : 0}};
        for (const Letter &l : u.letters)
            k.push_back({l.arrow, l.inverse ? 1 : 0});
        return k;
    };
    std::vector<StringWord> frontier;
    for (int v = 1; v <= g.quiver.n; ++v) {
        StringWord w = StringWord::trivial(v);
        out.push_back(w);
        seen.insert(key(w));
        frontier.push_back(w);
    }
    for (int len = 1; len <= max_len; ++len) {
        std::vector<StringWord> next;
        for (const StringWord &w : frontier) {
            for (bool inverse : {false, true}) {
                auto cands = inverse ? append_inverse_candidates(g, w)
                                     : append_direct_candidates(g, w);
                for (int a : cands) {
                    StringWord e = with_appended(w, Letter{a, inverse});
                    next.push_back(e);
                    StringWord c = canonical_string_form(g.quiver, e);
                    if (seen.insert(key(c)).second)
                        out.push_back(c);
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty())
            break;
    }
    return out;
}

std::vector<int> dimension_vector(const Quiver &q, const StringWord &w) {
    std::vector<int> d(q.n, 0);
    for (int v : word_positions(q, w))
        d[v - 1]++;
    return d;
}

std::vector<int> band_dimension_vector(const Quiver &q, const BandWord &w) {
    std::vector<int> d(q.n, 0);
    for (int v : band_positions(q, w))
        d[v - 1]++;
    return d;
}

bool window_valid(const GentlePair &g, const Letter &l1, const Letter &l2) {
    return letter_target(g.quiver, l1) == letter_source(g.quiver, l2) && window_ok(g, l1, l2);
}

std::vector<Letter> valid_extensions(const GentlePair &g, const StringWord &w) {
    std::vector<Letter> out;
    for (int a : append_direct_candidates(g, w))
        out.push_back(Letter{a, false});
    for (int a : append_inverse_candidates(g, w))
        out.push_back(Letter{a, true});
    return out;
}

std::string format_word(const Quiver &q, const StringWord &w) {
    if (w.is_trivial())
        return "e" + std::to_string(w.trivial_vertex);
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            os << " ";
        os << letter_name(q, w.letters[i]);
    }
    return os.str();
}

std::string format_band(const Quiver &q, const BandWord &w) {
    std::ostringstream os;
    os << "band(";
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            os << " ";
        os << letter_name(q, w.letters[i]);
    }
    os << ")";
    return os.str();
}

namespace {

std::vector<Letter> parse_letters(const Quiver &q, const std::string &text) {
    std::istringstream is(text);
    std::vector<Letter> letters;
    std::string tok;
    while (is >> tok) {
        bool inverse = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inverse = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        int idx = q.arrow_index(tok);
        if (idx < 0)
            throw std::runtime_error("unknown arrow name '" + tok + "'");
        letters.push_back(Letter{idx, inverse});
    }
    return letters;
}

} // namespace

StringWord parse_string_word(const Quiver &q, const std::string &text) {
    std::istringstream probe(text);
    std::string first;
    probe >> first;
    if (first.empty())
        throw std::runtime_error("empty word");
    if (first.size() > 1 && first[0] == 'e' &&
        std::all_of(first.begin() + 1, first.end(), [](char c) { return std::isdigit((unsigned char)c); })) {
        std::string rest;
        if (probe >> rest)
            throw std::runtime_error("trivial string takes no further letters");
        int v = std::stoi(first.substr(1));
        if (v < 1 || v > q.n)
            throw std::runtime_error("trivial string vertex out of range");
        return StringWord::trivial(v);
    }
    StringWord w;
    w.letters = parse_letters(q, text);
    if (w.letters.empty())
        throw std::runtime_error("empty word");
    return w;
}

BandWord parse_band_word(const Quiver &q, const std::string &text) {
    std::string body = text;
    auto l = body.find("band(");
    if (l != std::string::npos) {
        auto r = body.rfind(')');
        if (r == std::string::npos || r < l)
            throw std::runtime_error("unbalanced band(...)");
        body = body.substr(l + 5, r - l - 5);
    }
    BandWord w;
    w.letters = parse_letters(q, body);
    if (w.letters.empty())
        throw std::runtime_error("empty band word");
    return w;
}

} // namespace orbcc

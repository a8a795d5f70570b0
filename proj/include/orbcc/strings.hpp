#ifndef ORBCC_STRINGS_HPP
#define ORBCC_STRINGS_HPP

#include "orbcc/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbcc {

struct Letter {
    int arrow = -1;     // index into quiver.arrows
    bool inverse = false;

    bool operator==(const Letter &o) const { return arrow == o.arrow && inverse == o.inverse; }
    bool operator<(const Letter &o) const {
        return arrow != o.arrow ? arrow < o.arrow : inverse < o.inverse;
    }
};

// A walk in the quiver; trivial strings carry their vertex explicitly.
struct StringWord {
    int trivial_vertex = 0;
    std::vector<Letter> letters;

    static StringWord trivial(int v) { return StringWord{v, {}}; }
    bool is_trivial() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const StringWord &o) const;
};

struct BandWord {
    std::vector<Letter> letters; // cyclic
    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const BandWord &o) const { return letters == o.letters; }
};

int letter_source(const Quiver &q, const Letter &l);
int letter_target(const Quiver &q, const Letter &l);
Letter letter_inverse(const Letter &l);

StringWord word_inverse(const Quiver &q, const StringWord &w);
BandWord band_inverse(const BandWord &w);

// Vertices w(1)..w(m+1) for strings, w(1)..w(m) for bands.
std::vector<int> word_positions(const Quiver &q, const StringWord &w);
std::vector<int> band_positions(const Quiver &q, const BandWord &w);

// nullopt means valid; otherwise a description of the offending window.
std::optional<std::string> validate_string(const GentlePair &g, const StringWord &w);
std::optional<std::string> validate_band(const GentlePair &g, const BandWord &w);

struct PositionInfo {
    int vertex = 0;
    bool peak = false;
    bool deep = false;
    bool strict = false;
};

struct StringClassification {
    std::vector<PositionInfo> positions;
    // Extendability tests: "starts on a peak" means no arrow a with a*w a string.
    bool starts_on_peak = false;
    bool starts_on_deep = false;
    bool ends_on_peak = false;
    bool ends_on_deep = false;
};

StringClassification classify_positions(const GentlePair &g, const StringWord &w);
std::vector<PositionInfo> classify_band_positions(const GentlePair &g, const BandWord &w);

enum class Side { Start, End };
enum class HookKind { AddHook, AddCohook, RemoveHook, RemoveCohook };

// Removals return nullopt (the paper's zero marker) on pure direct/inverse
// words; additions throw when the peak/deep precondition fails.
std::optional<StringWord> hook_op(const GentlePair &g, const StringWord &w, Side side,
                                  HookKind kind);

enum class RotateDir { Plus, Minus };

// nullopt = the rotated curve is a boundary arc.
std::optional<StringWord> rotate(const GentlePair &g, const StringWord &w, Side side,
                                 RotateDir dir);

StringWord ar_translate(const GentlePair &g, const StringWord &w);
StringWord ar_translate_inverse(const GentlePair &g, const StringWord &w);

StringWord projective_string(const GentlePair &g, int v);
StringWord injective_string(const GentlePair &g, int v);
bool is_projective(const GentlePair &g, const StringWord &w);
bool is_injective(const GentlePair &g, const StringWord &w);

std::vector<StringWord> irreducible_targets(const GentlePair &g, const StringWord &w);

// min(w, w^-1) under letter order; used for equality up to inversion.
StringWord canonical_string_form(const Quiver &q, const StringWord &w);
BandWord band_canonical_form(const Quiver &q, const BandWord &w);

// All strings of the pair with at most max_len letters, canonical forms,
// deduplicated up to inversion.  Trivial strings included.
std::vector<StringWord> all_strings(const GentlePair &g, int max_len);

std::vector<int> dimension_vector(const Quiver &q, const StringWord &w);
std::vector<int> band_dimension_vector(const Quiver &q, const BandWord &w);

// Letters that can legally extend w on the right, direct candidates first.
std::vector<Letter> valid_extensions(const GentlePair &g, const StringWord &w);
// Two-letter window validity (walk composability plus the string rules).
bool window_valid(const GentlePair &g, const Letter &l1, const Letter &l2);

// Word grammar: whitespace-separated arrow names with optional ^-1 suffix;
// trivial strings as e<vertex>; bands optionally wrapped band( ... ).
std::string format_word(const Quiver &q, const StringWord &w);
std::string format_band(const Quiver &q, const BandWord &w);
StringWord parse_string_word(const Quiver &q, const std::string &text);
BandWord parse_band_word(const Quiver &q, const std::string &text);

} // namespace orbcc

#endif

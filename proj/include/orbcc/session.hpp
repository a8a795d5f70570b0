#ifndef ORBCC_SESSION_HPP
#define ORBCC_SESSION_HPP

#include "orbcc/ccmap.hpp"
#include "orbcc/orbifold.hpp"
#include "orbcc/quiver.hpp"
#include "orbcc/strings.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbcc {

// Exit codes shared by the CLI and the C API.
enum Status : int {
    StatusOk = 0,
    StatusValidation = 1,
    StatusMismatch = 2,
    StatusParse = 3,
    StatusInternal = 5,
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string &m) : std::runtime_error(m) {}
};

struct Session {
    TriangulationData tri;
    GentlePair pair;
    std::map<int, int> arrow_triangle;
    GeneralizedClusterQuiver gen;
    std::map<std::string, std::string> aliases;

    static Session from_text(const std::string &text);
    static Session from_file(const std::string &path);

    void add_alias(const std::string &alias, const std::string &arrow);
    std::string resolve_word_text(const std::string &text) const;
    StringWord parse_string(const std::string &text) const;
    BandWord parse_band(const std::string &text) const;
    LabelContext labels() const;
    std::string name_map() const;
};

struct RunResult {
    int status = StatusOk;
    std::string out;
};

// Dispatches one CLI command (validate, quiver, mutate, expand, cc, verify,
// lattice, grassmannian, strings, fuzz) against a session.
RunResult run_command(Session &s, const std::vector<std::string> &args);

} // namespace orbcc

#endif

#ifndef ORBCC_TESTS_SUPPORT_HPP
#define ORBCC_TESTS_SUPPORT_HPP

#include "orbcc/orbifold.hpp"
#include "orbcc/quiver.hpp"
#include "orbcc/session.hpp"
#include "orbcc/strings.hpp"

#include <string>
#include <vector>

namespace testsupport {

inline std::string data_path(const std::string &name) {
    return std::string(ORBCC_DATA_DIR) + "/" + name;
}

inline orbcc::Session example1_session() {
    auto s = orbcc::Session::from_file(data_path("example1.orb"));
    s.add_alias("alpha", "2>1:0");
    s.add_alias("beta", "3>2:0");
    s.add_alias("rho", "loop:3");
    return s;
}

inline orbcc::Session example2_session() {
    auto s = orbcc::Session::from_file(data_path("example2.orb"));
    s.add_alias("alpha", "2>1:0");
    s.add_alias("beta", "1>4:0");
    s.add_alias("gamma", "4>2:0");
    s.add_alias("delta", "3>1:0");
    s.add_alias("mu", "loop:2");
    s.add_alias("eps", "loop:3");
    return s;
}

// The five-vertex gentle pair used for string calculus examples:
// delta: 1->2, beta: 2->3, alpha: 4->2, gamma: 3->4, mu: 3->5,
// relations alpha*beta, beta*gamma, gamma*alpha.
inline orbcc::GentlePair example44_pair() {
    orbcc::GentlePair g;
    g.quiver.n = 5;
    g.quiver.add_arrow("delta", 1, 2);
    g.quiver.add_arrow("beta", 2, 3);
    g.quiver.add_arrow("alpha", 4, 2);
    g.quiver.add_arrow("gamma", 3, 4);
    g.quiver.add_arrow("mu", 3, 5);
    g.add_relation("alpha", "beta");
    g.add_relation("beta", "gamma");
    g.add_relation("gamma", "alpha");
    g.check();
    return g;
}

inline orbcc::StringWord word(const orbcc::GentlePair &g, const std::string &text) {
    return orbcc::parse_string_word(g.quiver, text);
}

inline orbcc::BandWord band(const orbcc::GentlePair &g, const std::string &text) {
    return orbcc::parse_band_word(g.quiver, text);
}

} // namespace testsupport

#endif

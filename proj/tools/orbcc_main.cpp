// Command line front end; all computation goes through the C API.

#include "orbcc/orbcc.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace {

void usage(FILE *to) {
    std::fprintf(to,
                 "usage: orbcc <orbifold-file> [--alias NAME=ARROW]... [--name-map] "
                 "<command> [options]\n"
                 "\n"
                 "commands:\n"
                 "  validate\n"
                 "  quiver [--generalized|--gentle|--cmatrix]\n"
                 "  mutate --at K [--seq K1,K2,...]\n"
                 "  expand --string W | --band W [--labels] [--coefficient-free]\n"
                 "  cc --string W | --band W [--coefficient-free]\n"
                 "  verify --string W | --band W\n"
                 "  lattice --string W | --band W [--edges]\n"
                 "  grassmannian --string W | --band W\n"
                 "  strings --op <classify|hook|cohook|ar|ar-inv|rotate> --string W"
                 " [--side start|end] [--kind add|remove] [--dir plus|minus]\n"
                 "  fuzz [--count N] [--max-len L] [--seed S]\n"
                 "\n"
                 "exit codes: 0 ok, 1 validation failure, 2 verification mismatch,"
                 " 3 parse error\n");
}

int fail(orbcc_status st, char *err) {
    if (err) {
        std::fprintf(stderr, "orbcc: %s\n", err);
        orbcc_free(err);
    }
    return (int)st;
}

} // namespace

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        usage(args.empty() ? stderr : stdout);
        return args.empty() ? 3 : 0;
    }

    const std::string file = args[0];
    std::vector<std::pair<std::string, std::string>> aliases;
    bool want_name_map = false;
    std::vector<std::string> cmd;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (cmd.empty() && args[i] == "--alias") {
            if (i + 1 >= args.size()) {
                std::fprintf(stderr, "orbcc: --alias needs NAME=ARROW\n");
                return 3;
            }
            std::string spec = args[++i];
            auto eq = spec.find('=');
            if (eq == std::string::npos) {
                std::fprintf(stderr, "orbcc: --alias needs NAME=ARROW\n");
                return 3;
            }
            aliases.push_back({spec.substr(0, eq), spec.substr(eq + 1)});
        } else if (cmd.empty() && args[i] == "--name-map") {
            want_name_map = true;
        } else {
            cmd.push_back(args[i]);
        }
    }

    orbcc_session *session = nullptr;
    char *err = nullptr;
    orbcc_status st = orbcc_open_file(file.c_str(), &session, &err);
    if (st != ORBCC_OK)
        return fail(st, err);

    for (const auto &[name, arrow] : aliases) {
        st = orbcc_alias(session, name.c_str(), arrow.c_str(), &err);
        if (st != ORBCC_OK) {
            orbcc_close(session);
            return fail(st, err);
        }
    }

    if (want_name_map) {
        char *out = nullptr;
        st = orbcc_name_map(session, &out, &err);
        if (st != ORBCC_OK) {
            orbcc_close(session);
            return fail(st, err);
        }
        std::fputs(out, stdout);
        orbcc_free(out);
        if (cmd.empty()) {
            orbcc_close(session);
            return 0;
        }
    }

    if (cmd.empty()) {
        usage(stderr);
        orbcc_close(session);
        return 3;
    }

    std::vector<const char *> cargv;
    for (const auto &c : cmd)
        cargv.push_back(c.c_str());
    char *out = nullptr;
    st = orbcc_run(session, (int)cargv.size(), cargv.data(), &out, &err);
    if (out) {
        std::fputs(out, stdout);
        orbcc_free(out);
    }
    orbcc_close(session);
    if (st != ORBCC_OK && err)
        return fail(st, err);
    return (int)st;
}

#include "orbcc/orbcc.h"

#include "orbcc/session.hpp"

#include <cstring>
#include <new>
#include <string>

struct orbcc_session_s {
    orbcc::Session session;
};

namespace {

char *dup_string(const std::string &s) {
    char *p = new (std::nothrow) char[s.size() + 1];
    if (!p)
        return nullptr;
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void set_err(char **errmsg, const std::string &m) {
    if (errmsg)
        *errmsg = dup_string(m);
}

template <typename Fn> orbcc_status open_impl(Fn make, orbcc_session **out, char **errmsg) {
    if (!out)
        return ORBCC_EINTERNAL;
    *out = nullptr;
    try {
        auto *s = new orbcc_session_s{make()};
        *out = s;
        return ORBCC_OK;
    } catch (const orbcc::ValidationError &e) {
        set_err(errmsg, e.what());
        return ORBCC_EVALIDATION;
    } catch (const orbcc::OrbifoldParseError &e) {
        set_err(errmsg, e.what());
        return ORBCC_EPARSE;
    } catch (const std::exception &e) {
        set_err(errmsg, e.what());
        return ORBCC_EINTERNAL;
    }
}

} // namespace

extern "C" {

const char *orbcc_version(void) { return "orbcc 1.0.0"; }

orbcc_status orbcc_open_file(const char *path, orbcc_session **out, char **errmsg) {
    if (!path)
        return ORBCC_EPARSE;
    return open_impl([&] { return orbcc::Session::from_file(path); }, out, errmsg);
}

orbcc_status orbcc_open_text(const char *text, orbcc_session **out, char **errmsg) {
    if (!text)
        return ORBCC_EPARSE;
    return open_impl([&] { return orbcc::Session::from_text(text); }, out, errmsg);
}

void orbcc_close(orbcc_session *s) { delete s; }

orbcc_status orbcc_alias(orbcc_session *s, const char *alias, const char *arrow,
                         char **errmsg) {
    if (!s || !alias || !arrow)
        return ORBCC_EPARSE;
    try {
        s->session.add_alias(alias, arrow);
        return ORBCC_OK;
    } catch (const std::exception &e) {
        set_err(errmsg, e.what());
        return ORBCC_EPARSE;
    }
}

orbcc_status orbcc_name_map(orbcc_session *s, char **out, char **errmsg) {
    if (!s || !out)
        return ORBCC_EPARSE;
    try {
        *out = dup_string(s->session.name_map());
        return ORBCC_OK;
    } catch (const std::exception &e) {
        set_err(errmsg, e.what());
        return ORBCC_EINTERNAL;
    }
}

orbcc_status orbcc_run(orbcc_session *s, int argc, const char *const *argv, char **out,
                       char **errmsg) {
    if (!s || argc < 1 || !argv)
        return ORBCC_EPARSE;
    try {
        std::vector<std::string> args;
        for (int i = 0; i < argc; ++i)
            args.push_back(argv[i]);
        orbcc::RunResult r = orbcc::run_command(s->session, args);
        if (out)
            *out = dup_string(r.out);
        return static_cast<orbcc_status>(r.status);
    } catch (const std::exception &e) {
        set_err(errmsg, e.what());
        return ORBCC_EINTERNAL;
    }
}

void orbcc_free(char *p) { delete[] p; }

} // extern "C"

/* C interface to the orbcc computation core.
 *
 * All functions returning orbcc_status use 0 for success; nonzero values
 * follow the CLI exit-code convention.  Strings returned through out
 * parameters are heap allocated and must be released with orbcc_free.
 */
#ifndef ORBCC_H
#define ORBCC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct orbcc_session_s orbcc_session;

typedef enum orbcc_status_e {
    ORBCC_OK = 0,
    ORBCC_EVALIDATION = 1, /* triangulation or word fails its invariants */
    ORBCC_EMISMATCH = 2,   /* verify found unequal polynomials */
    ORBCC_EPARSE = 3,      /* file/word/command syntax */
    ORBCC_EINTERNAL = 5
} orbcc_status;

const char *orbcc_version(void);

/* Parses and validates an orbifold file.  On failure *out is NULL and
 * *errmsg (if non-NULL) carries a message. */
orbcc_status orbcc_open_file(const char *path, orbcc_session **out, char **errmsg);
orbcc_status orbcc_open_text(const char *text, orbcc_session **out, char **errmsg);
void orbcc_close(orbcc_session *s);

/* Registers a word-token alias for a generated arrow name. */
orbcc_status orbcc_alias(orbcc_session *s, const char *alias, const char *arrow,
                         char **errmsg);

/* Arrow-name table, one line per arrow. */
orbcc_status orbcc_name_map(orbcc_session *s, char **out, char **errmsg);

/* Runs one command (argv[0] = command name, then options) and captures its
 * stdout.  The returned status is the CLI exit code. */
orbcc_status orbcc_run(orbcc_session *s, int argc, const char *const *argv, char **out,
                       char **errmsg);

void orbcc_free(char *p);

#ifdef __cplusplus
}
#endif

#endif

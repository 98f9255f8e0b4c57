#ifndef EDSFN_EDSFN_H
#define EDSFN_EDSFN_H

/* C interface to the edsfn engine: curves over Q(t) or GF(p)(t), elliptic
 * divisibility sequences, heights, Hasse invariants and primitivity bounds.
 *
 * Every call returns an edsfn_status. On failure the message and the error
 * name of the most recent failure on the calling thread are available from
 * edsfn_last_error and edsfn_last_error_name. Strings returned through out
 * parameters are owned by the caller and released with edsfn_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define EDSFN_API __declspec(dllexport)
#else
#define EDSFN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum edsfn_status {
    EDSFN_OK = 0,
    EDSFN_ERR_ASSUMPTION = 1, /* a standing hypothesis fails: char 2/3, smooth fibration, torsion point, ... */
    EDSFN_ERR_PARSE = 2,
    EDSFN_ERR_IO = 3,
    EDSFN_ERR_INVALID_ARGUMENT = 4,
    EDSFN_ERR_COMPUTATION = 5, /* a checked identity or bound failed */
    EDSFN_ERR_INTERNAL = 6
} edsfn_status;

typedef struct edsfn_curve edsfn_curve;

EDSFN_API const char* edsfn_version(void);

/* Curve files use `key = value` lines: field, label, a1 a2 a3 a4 a6, point.x, point.y. */
EDSFN_API edsfn_status edsfn_curve_load_file(const char* path, edsfn_curve** out);
EDSFN_API edsfn_status edsfn_curve_load_text(const char* text, edsfn_curve** out);
/* dir may be NULL for the default fixture directory. */
EDSFN_API edsfn_status edsfn_curve_load_fixture(const char* id, const char* dir, edsfn_curve** out);
EDSFN_API void edsfn_curve_free(edsfn_curve* curve);

/* Canonical curve-file text. */
EDSFN_API edsfn_status edsfn_curve_canonical(const edsfn_curve* curve, char** out_text);

/* command is one of fibres, eds, height, hasse, bounds, report. nmax >= 1;
 * depth = 0 lets the component solver choose. Writes a JSON document. */
EDSFN_API edsfn_status edsfn_run(const edsfn_curve* curve, const char* command, long nmax, long depth, char** out_json);

/* Reproduces one fixture; *out_pass is 1 iff every expected fact matched. */
EDSFN_API edsfn_status edsfn_repro(const char* id, const char* dir, int* out_pass, char** out_json);

/* Human-readable table for a JSON document from edsfn_run or edsfn_repro. */
EDSFN_API edsfn_status edsfn_render(const char* json, char** out_text);

/* Number of fixtures and the id at an index (static storage). */
EDSFN_API size_t edsfn_fixture_count(void);
EDSFN_API const char* edsfn_fixture_id(size_t index);

EDSFN_API const char* edsfn_last_error(void);
EDSFN_API const char* edsfn_last_error_name(void);
EDSFN_API void edsfn_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif

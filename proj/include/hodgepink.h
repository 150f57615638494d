#ifndef HODGEPINK_H
#define HODGEPINK_H

/* C interface to the hodgepink library: exact computations with (phi,N)-modules,
 * Hodge-Pink lattices, weak admissibility and the related combinatorics.
 *
 * All inputs and outputs are JSON documents; instances are opaque handles.
 * Status code 1 is reserved for the CLI's "predicate false" exit and is never
 * returned by these functions.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HP_OK = 0,
  HP_ERR_INPUT = 2,      /* malformed input or violated precondition */
  HP_ERR_PRECISION = 3,  /* result not certifiable within the precision window */
  HP_ERR_SPECTRUM = 4    /* subobject enumeration outside the supported classes */
} hp_status;

typedef struct hp_instance hp_instance;

const char* hp_version(void);

/* Parse an instance document from JSON text or a file. On failure returns
 * NULL; when err is non-NULL it receives a malloc'd message to release with
 * hp_string_free. */
hp_instance* hp_instance_parse(const char* json_text, char** err);
hp_instance* hp_instance_load(const char* path, char** err);
void hp_instance_free(hp_instance* inst);

/* Serialize the instance back to canonical JSON (malloc'd). */
char* hp_instance_dump(const hp_instance* inst);

/* Evaluate a command against an instance. Commands: validate, polygon, bound,
 * convert, wa, hn, newton, dims, jordan, zero-section, selftest.
 *
 * options_json may be NULL or an object such as
 *   {"method": "primal"|"dual"|"both", "convention": "eta"|"id",
 *    "precision": 30, "mu": {...}, "seed": 7}
 *
 * On HP_OK, *report receives a malloc'd JSON report and *verdict is 1/0 for
 * predicate commands (wa, bound, zero-section, newton membership, validate,
 * selftest) or -1 when no predicate applies. On error *report receives a
 * malloc'd message. */
hp_status hp_eval(const hp_instance* inst, const char* command, const char* options_json,
                  char** report, int* verdict);

/* Run the built-in property suites without an instance. */
hp_status hp_selftest(unsigned long long seed, char** report, int* verdict);

void hp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HODGEPINK_H */

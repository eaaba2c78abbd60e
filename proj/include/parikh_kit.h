/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the Parikh/constrained-automata toolkit. Models are opaque
 * handles created from JSON; every function reports a parikh_status, with a
 * human-readable message available from parikh_last_error() on failure.
 * Returned strings are owned by the caller and released with
 * parikh_string_free(); models with parikh_model_free().
 */
#ifndef PARIKH_KIT_H
#define PARIKH_KIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct parikh_model parikh_model;

typedef enum parikh_status {
  PARIKH_OK = 0,
  PARIKH_ERR_PARSE = 1,
  PARIKH_ERR_DIMENSION = 2,
  PARIKH_ERR_SOLVER_CAP = 3,
  PARIKH_ERR_MONOID_CAP = 4,
  PARIKH_ERR_SUPPORT_CAP = 5,
  PARIKH_ERR_NOT_BOUNDED = 6,
  PARIKH_ERR_SOCLE = 7,
  PARIKH_ERR_CONSTRAINT_DETERMINISM = 8,
  PARIKH_ERR_OVERFLOW = 9,
  PARIKH_ERR_INVALID_ARGUMENT = 10,
  PARIKH_ERR_IO = 11,
  PARIKH_ERR_INTERNAL = 12
} parikh_status;

typedef enum parikh_model_kind {
  PARIKH_MODEL_PA = 0,
  PARIKH_MODEL_CA = 1,
  PARIKH_MODEL_EPSCA = 2,
  PARIKH_MODEL_DETAPA = 3,
  PARIKH_MODEL_BSL = 4,
  PARIKH_MODEL_CQDD = 5
} parikh_model_kind;

/* Desk-scale search limits. Zero-initialized fields fall back to defaults. */
typedef struct parikh_config {
  long long solver_cap;  /* candidate vectors per linear system (default 10^6) */
  long long monoid_cap;  /* matrix monoid closure size (default 10^4) */
  int support_cap;       /* transitions per SCC in Parikh supports (default 14) */
  int cd_bound;          /* constraint-determinism verification bound (default 8) */
  long long seed;        /* reserved for randomized drivers */
} parikh_config;

/* Fill with the built-in defaults. */
void parikh_config_defaults(parikh_config* config);
/* Apply the PARIKH_KIT_CAPS environment variable (comma-separated key=value
 * with keys solver, monoid, support, cd) on top of *config. */
parikh_status parikh_config_env(parikh_config* config);

/* Message describing the most recent failure on this thread. */
const char* parikh_last_error(void);

parikh_status parikh_model_from_json(const char* text, parikh_model** out);
parikh_status parikh_model_from_file(const char* path, parikh_model** out);
void parikh_model_free(parikh_model* model);

parikh_model_kind parikh_model_get_kind(const parikh_model* model);

/* Exact membership; *accepted is 1 or 0. The empty string is the empty word. */
parikh_status parikh_model_member(const parikh_model* model, const char* word,
                                  const parikh_config* config, int* accepted);

/* Run the determinization pipeline. BSL input needs no socle; PA input needs
 * socle as comma-separated words ("a,b"). On success *cqdd_out holds the
 * resulting model and, when report_json_out is non-NULL, *report_json_out a
 * JSON stage report. */
parikh_status parikh_model_pipeline(const parikh_model* model, const char* socle,
                                    const parikh_config* config, parikh_model** cqdd_out,
                                    char** report_json_out);

/* Compare the two models on every word up to max_len (length-lexicographic).
 * *equal is 1 when they agree; otherwise *counterexample_out (if non-NULL)
 * receives the first differing word. */
parikh_status parikh_model_crosscheck(const parikh_model* a, const parikh_model* b, int max_len,
                                      const parikh_config* config, int* equal,
                                      char** counterexample_out);

parikh_status parikh_model_to_json(const parikh_model* model, char** out);
parikh_status parikh_model_to_dot(const parikh_model* model, char** out);

void parikh_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PARIKH_KIT_H */

/* Copyright 2026 The qlr developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * C interface of the qlr library. Every entry point takes file contents
 * as NUL-terminated text, never paths, and produces reports as text the
 * caller releases with qlr_string_free. Calls are thread-safe; the error
 * message store is per thread.
 */

#ifndef QLR_QLR_H
#define QLR_QLR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qlr_status {
  QLR_OK = 0,        /* report produced, everything passed */
  QLR_FAILED = 1,    /* report produced, a check or protocol run failed */
  QLR_BAD_INPUT = 2  /* unusable input, no report; see qlr_last_error */
} qlr_status;

/* Library version as "major.minor.patch". */
const char* qlr_version(void);

/* Message of the most recent QLR_BAD_INPUT on the calling thread, or ""
 * if the last call succeeded. The pointer stays valid until the next qlr
 * call on the same thread. */
const char* qlr_last_error(void);

/* Releases any string returned through a char** out-parameter. NULL ok. */
void qlr_string_free(char* text);

/* Selects the interaction term to eliminate and how to factor it. Leave
 * chi NULL to select by chi_index (0-based position in the normalized
 * term list); set chi to a Pauli word to select by string. */
typedef struct qlr_embed_params {
  const char* chi;
  long chi_index;   /* used when chi is NULL; negative means unset */
  int factor_case;  /* 0 search, 1 whole word, 2 explicit mask */
  const char* mask; /* bitstring over the system qubits, for case 2 */
  int budget;       /* exhaustive-search limit; 0 keeps the default */
} qlr_embed_params;

/* Rewrites hamiltonian_text around one ancilla and returns the embedding
 * report. params must not be NULL (there is no default chi). */
qlr_status qlr_embed(const char* hamiltonian_text,
                     const qlr_embed_params* params, char** report_out);

/* Tolerances for qlr_verify; fields <= 0 keep the defaults
 * (1e-12 for the matrix checks, 1e-9 for the spectrum, cap 12). */
typedef struct qlr_verify_params {
  double tol_unitary;
  double tol_decoupling;
  double tol_blocks;
  double tol_spectrum;
  size_t cap;
} qlr_verify_params;

/* Replays the dense checks of an embedding report against the original
 * Hamiltonian. QLR_OK when every check passes, QLR_FAILED when any check
 * fails (the report is still returned and names the failures). params
 * may be NULL for all defaults. */
qlr_status qlr_verify(const char* hamiltonian_text,
                      const char* embedding_text,
                      const qlr_verify_params* params, char** report_out);

/* Anneal options. Zero-valued fields keep the defaults (tau 10, 1000
 * steps, field 1, b0 1, 101 gap samples, cap 12), except tau, where only
 * a negative value means unset: tau 0 scores the initial state without
 * evolving. */
typedef struct qlr_anneal_params {
  double tau;       /* negative means unset */
  long steps;
  int paired;       /* nonzero runs the embedded flip-all pair too */
  double field;     /* uniform transverse-field weight */
  double b0;        /* flip-all weight, paired mode */
  long gap_samples;
  size_t cap;
} qlr_anneal_params;

/* Anneals a spin-glass instance file and reports ground-state statistics
 * and the minimum gap; paired mode also reports the (N+1)-qubit embedded
 * run and the success-probability difference. params may be NULL. */
qlr_status qlr_anneal(const char* instance_text,
                      const qlr_anneal_params* params, char** report_out);

/* Extracts the Hamiltonian file path referenced by a protocol config so
 * the caller can load it; qlr does no file I/O. */
qlr_status qlr_protocol_target(const char* config_text, char** path_out);

/* Optional overrides applied on top of a protocol config. */
typedef struct qlr_protocol_params {
  const char* mode; /* "full" or "shortcut"; NULL keeps the config */
  long seed;        /* negative keeps the config */
  double threshold; /* <= 0 keeps the config */
  size_t cap;       /* 0 keeps the config */
} qlr_protocol_params;

/* Runs the state-preparation protocol described by config_text on the
 * supplied Hamiltonian text. QLR_FAILED reports leakage or invariance
 * refusals inside the report. params may be NULL. */
qlr_status qlr_protocol(const char* hamiltonian_text,
                        const char* config_text,
                        const qlr_protocol_params* params, char** report_out);

/* Dynamics options. Zero-valued fields keep the defaults (tau 1, 100
 * steps, initial "zeros", cap 12), except tau, where only a negative
 * value means unset. */
typedef struct qlr_simulate_params {
  double tau;          /* negative means unset */
  long steps;
  const char* initial; /* "zeros", "plus", or a bitstring */
  size_t cap;
} qlr_simulate_params;

/* Integrates a Hamiltonian and reports its spectrum and final-state
 * statistics. When trajectory_out is non-NULL it receives the full
 * line-delimited trajectory dump. params may be NULL. */
qlr_status qlr_simulate(const char* hamiltonian_text,
                        const qlr_simulate_params* params, char** report_out,
                        char** trajectory_out);

#ifdef __cplusplus
}
#endif

#endif /* QLR_QLR_H */

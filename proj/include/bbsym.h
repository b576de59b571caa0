/* Copyright 2026 the bbsym authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the bang-bang symmetrization engine.
 *
 * All functions returning bbsym_status leave their outputs untouched on
 * failure; bbsym_last_error() returns a thread-local message for the most
 * recent failure on the calling thread. Strings returned through char**
 * outputs are heap-allocated and must be released with bbsym_string_free().
 * Handles are opaque and must be released with the matching *_free().
 */

#ifndef BBSYM_H
#define BBSYM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bbsym_hamiltonian bbsym_hamiltonian;
typedef struct bbsym_sequence bbsym_sequence;

typedef enum bbsym_status {
  BBSYM_OK = 0,
  BBSYM_ERR_INVALID = 1,  /* bad input or precondition violation */
  BBSYM_ERR_CLOSURE = 2,  /* pulse cycle does not compose to the identity */
  BBSYM_ERR_CAP = 3,      /* dense dimension above the configured cap */
  BBSYM_ERR_NOMEM = 4,
  BBSYM_ERR_INTERNAL = 5
} bbsym_status;

const char* bbsym_version(void);
const char* bbsym_last_error(void);
/* Stable machine-readable token for a status: "ok", "validation",
 * "closure", "cap", "nomem", "internal". */
const char* bbsym_status_name(bbsym_status status);

void bbsym_string_free(char* s);

/* --- Hamiltonians ------------------------------------------------------- */

/* builder: "linear" | "bilinear" | "hnn" | "zz_chain" | "pairwise_isotropic" */
bbsym_status bbsym_hamiltonian_build(const char* builder, uint32_t n_qubits,
                                     bbsym_hamiltonian** out);
bbsym_status bbsym_hamiltonian_from_json(const char* json_text,
                                         bbsym_hamiltonian** out);
bbsym_status bbsym_hamiltonian_to_json(const bbsym_hamiltonian* h,
                                       char** out_json);
uint32_t bbsym_hamiltonian_n_qubits(const bbsym_hamiltonian* h);
size_t bbsym_hamiltonian_term_count(const bbsym_hamiltonian* h);
/* factor is an exact rational string, e.g. "16" or "-1/3". */
bbsym_status bbsym_hamiltonian_scale(const bbsym_hamiltonian* h,
                                     const char* factor,
                                     bbsym_hamiltonian** out);
void bbsym_hamiltonian_free(bbsym_hamiltonian* h);

/* --- Sequences ---------------------------------------------------------- */

/* name: "free" | "linear_elim4" | "mqe8" | "mqe16_qx" | "full_elim16" |
 *       "collective6" | "collective14_block3" (the last fixes n_qubits = 3;
 *       pass 3 or 0). */
bbsym_status bbsym_sequence_build(const char* name, uint32_t n_qubits,
                                  bbsym_sequence** out);
/* n_hint resolves the qubit count when the JSON omits it; pass 0 for none. */
bbsym_status bbsym_sequence_from_json(const char* json_text, uint32_t n_hint,
                                      bbsym_sequence** out);
bbsym_status bbsym_sequence_to_json(const bbsym_sequence* s, char** out_json);
uint32_t bbsym_sequence_n_qubits(const bbsym_sequence* s);
size_t bbsym_sequence_pulse_count(const bbsym_sequence* s);
size_t bbsym_sequence_evolve_count(const bbsym_sequence* s);
/* Exact rational string. */
bbsym_status bbsym_sequence_total_weight(const bbsym_sequence* s,
                                         char** out_rational);
void bbsym_sequence_free(bbsym_sequence* s);

/* --- Symbolic analysis --------------------------------------------------- */

bbsym_status bbsym_average_hamiltonian(const bbsym_sequence* s,
                                       const bbsym_hamiltonian* h,
                                       bbsym_hamiltonian** out);
/* Toggling frames as JSON, in time order. */
bbsym_status bbsym_frames_json(const bbsym_sequence* s, char** out_json);
/* Error-group report of the Hamiltonian's system words. */
bbsym_status bbsym_group_analysis_json(const bbsym_hamiltonian* h,
                                       char** out_json);
/* Terms bucketed by identical bath vector (collective structure view). */
bbsym_status bbsym_collective_groups_json(const bbsym_hamiltonian* h,
                                          char** out_json);

/* --- Numeric verification ------------------------------------------------ */

/* opnorm(U_cycle(tau) - exp(-i W tau H_avg)) per tau plus a log-log fit.
 * taus must be strictly decreasing, n_taus >= 4. cap_dim <= 0 selects the
 * default cap (4096). Bath operators are seeded Hermitian matrices of unit
 * operator norm, a pure function of (labels(h), bath_dim, seed). */
bbsym_status bbsym_effective_error_json(const bbsym_sequence* s,
                                        const bbsym_hamiltonian* h,
                                        int bath_dim, uint64_t seed,
                                        const double* taus, size_t n_taus,
                                        int cap_dim, char** out_json);
/* Leakage out of the collective decoherence-free subspace after n_cycles,
 * per tau, starting from the first DFS basis vector. */
bbsym_status bbsym_leakage_curve_json(const bbsym_sequence* s,
                                      const bbsym_hamiltonian* h, int bath_dim,
                                      uint64_t seed, const double* taus,
                                      size_t n_taus, int n_cycles, int cap_dim,
                                      char** out_json);
/* Collective DFS of n qubits: dimension, annihilation residual, spin
 * sector table. */
bbsym_status bbsym_collective_dfs_json(uint32_t n_qubits, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* BBSYM_H */

// Copyright 2026 The planesched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the measurement scheduler. Every function returns a status
 * code; on failure planesched_last_error() describes it (thread-local, valid
 * until the next call on the same thread). Strings returned through char**
 * are heap-allocated and must be released with planesched_free_string. */

#ifndef PLANESCHED_PLANESCHED_H_
#define PLANESCHED_PLANESCHED_H_

#include <stdint.h>

#if defined(_WIN32)
#define PLANESCHED_API __declspec(dllexport)
#else
#define PLANESCHED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum planesched_status {
  PLANESCHED_OK = 0,
  PLANESCHED_INVALID_ARGUMENT = 1,
  PLANESCHED_MODULUS_MISMATCH = 2,
  PLANESCHED_DIVISION_BY_ZERO = 3,
  PLANESCHED_DEGENERATE_INPUT = 4,
  PLANESCHED_INVALID_SIZE = 5,
  PLANESCHED_SIZE_LIMIT = 6,
  PLANESCHED_COVERAGE_VIOLATION = 7,
  PLANESCHED_INTERNAL_CONSISTENCY = 8,
  PLANESCHED_INVALID_SWAP = 9,
  PLANESCHED_PARSE = 10,
  PLANESCHED_IO = 11,
  PLANESCHED_SYMMETRY_VIOLATION = 12,
  PLANESCHED_UNKNOWN = 99
} planesched_status;

typedef struct planesched_schedule planesched_schedule;
typedef struct planesched_hamiltonian planesched_hamiltonian;
typedef struct planesched_state planesched_state;

PLANESCHED_API const char* planesched_version(void);
PLANESCHED_API const char* planesched_status_name(int status);
PLANESCHED_API const char* planesched_last_error(void);
PLANESCHED_API void planesched_free_string(char* s);

/* mapping is "jw" or "parity" */
PLANESCHED_API int planesched_schedule_build(int n_orbitals, const char* mapping,
                                             planesched_schedule** out);
PLANESCHED_API int planesched_schedule_load(const char* path, planesched_schedule** out);
PLANESCHED_API int planesched_schedule_save(const planesched_schedule* s, const char* path);
PLANESCHED_API int planesched_schedule_json(const planesched_schedule* s, char** out);
/* "key: value" lines */
PLANESCHED_API int planesched_schedule_stats(const planesched_schedule* s, char** out);
PLANESCHED_API int planesched_schedule_info(const planesched_schedule* s, int* n_orbitals,
                                            int* qubits, int* cliques);
/* Checks a (possibly loaded) schedule; *passed is 1 or 0. */
PLANESCHED_API int planesched_schedule_verify(const planesched_schedule* s, int* passed,
                                              char** report);
PLANESCHED_API void planesched_schedule_free(planesched_schedule* s);

/* Rebuilds and checks the construction for n orbitals. */
PLANESCHED_API int planesched_verify_construction(int n_orbitals, const char* mapping,
                                                  int* passed, char** report);

/* Text picture of the plane used for n orbitals; anchor may be NULL or a
 * point label such as "gamma(4,3)", "beta(2)", "alpha". */
PLANESCHED_API int planesched_render_plane(int n_orbitals, const char* anchor, char** out);

PLANESCHED_API int planesched_hamiltonian_load(const char* path, planesched_hamiltonian** out);
PLANESCHED_API int planesched_hamiltonian_random(int n_orbitals, uint64_t seed,
                                                 planesched_hamiltonian** out);
PLANESCHED_API int planesched_hamiltonian_orbitals(const planesched_hamiltonian* h, int* n);
PLANESCHED_API int planesched_hamiltonian_json(const planesched_hamiltonian* h, char** out);
PLANESCHED_API void planesched_hamiltonian_free(planesched_hamiltonian* h);

/* States live in the qubit encoding of `mapping`. basis takes occupation bits,
 * spin-orbital qubit 0 first, and encodes them; a file lists one amplitude
 * per line as "re im" in basis order. */
PLANESCHED_API int planesched_state_random(int qubits, uint64_t seed, planesched_state** out);
PLANESCHED_API int planesched_state_basis(const char* bits, const char* mapping,
                                          planesched_state** out);
PLANESCHED_API int planesched_state_load(const char* path, planesched_state** out);
PLANESCHED_API int planesched_state_qubits(const planesched_state* st, int* qubits);
PLANESCHED_API void planesched_state_free(planesched_state* st);

/* shots == 0 gives exact outcome distributions. The report is "key: value"
 * lines; energy may be NULL. */
PLANESCHED_API int planesched_estimate(const planesched_schedule* s,
                                       const planesched_hamiltonian* h,
                                       const planesched_state* st, uint64_t shots,
                                       uint64_t seed, double* energy, char** report);
/* <psi|H|psi> without the schedule. */
PLANESCHED_API int planesched_direct_energy(const planesched_hamiltonian* h,
                                            const planesched_state* st, const char* mapping,
                                            double* energy);

#ifdef __cplusplus
}
#endif

#endif  // PLANESCHED_PLANESCHED_H_

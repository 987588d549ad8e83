/*
 *  Copyright 2026 The egas Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

/*
 * C interface to the egas library.
 *
 * Handles are opaque and owned by the caller; free them with the matching
 * *_free function (NULL is accepted). Every function that can fail returns
 * an egas_status; on failure egas_last_error() describes the problem for
 * the calling thread until its next failing call. Strings returned through
 * char** are heap-allocated and released with egas_string_free.
 */

#ifndef EGAS_EGAS_H
#define EGAS_EGAS_H

#include <stddef.h>
#include <stdint.h>

#if defined(EGAS_BUILDING_LIBRARY)
#define EGAS_API __attribute__((visibility("default")))
#else
#define EGAS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum egas_status {
  EGAS_OK = 0,
  EGAS_ERR_ARGUMENT = 1, /* null pointer, unknown name, bad option */
  EGAS_ERR_IO = 2,       /* file cannot be read or written */
  EGAS_ERR_PARSE = 3,    /* malformed input text */
  EGAS_ERR_SEMANTIC = 4, /* well-formed but invalid, e.g. not a lattice */
  EGAS_ERR_LIMIT = 5,    /* input exceeds a documented size limit */
  EGAS_ERR_INTERNAL = 6
} egas_status;

typedef struct egas_lattice egas_lattice;
typedef struct egas_domain egas_domain;
typedef struct egas_system egas_system;

EGAS_API const char* egas_version(void);
EGAS_API const char* egas_status_name(egas_status s);
EGAS_API const char* egas_last_error(void);
EGAS_API void egas_string_free(char* s);

/* Lattices, from the line format (elem / cover / map / domain). */
EGAS_API egas_status egas_lattice_parse(const char* text, egas_lattice** out);
EGAS_API egas_status egas_lattice_load(const char* path, egas_lattice** out);
EGAS_API void egas_lattice_free(egas_lattice* l);
EGAS_API size_t egas_lattice_size(const egas_lattice* l);
EGAS_API egas_status egas_lattice_find(const egas_lattice* l, const char* name, uint32_t* id);
EGAS_API egas_status egas_lattice_name(const egas_lattice* l, uint32_t id, char** out);
EGAS_API egas_status egas_lattice_leq(const egas_lattice* l, uint32_t a, uint32_t b, int* out);
/* glb/lub of n ids; the empty glb is top, the empty lub bottom. */
EGAS_API egas_status egas_lattice_glb(const egas_lattice* l, const uint32_t* ids, size_t n,
                                      uint32_t* out);
EGAS_API egas_status egas_lattice_lub(const egas_lattice* l, const uint32_t* ids, size_t n,
                                      uint32_t* out);

/* Abstract domains: meet closure of the given elements plus top. */
EGAS_API egas_status egas_domain_from_image(const egas_lattice* l, const uint32_t* ids, size_t n,
                                            egas_domain** out);
/* "full" or a domain declared in the lattice file. */
EGAS_API egas_status egas_domain_named(const egas_lattice* l, const char* name, egas_domain** out);
EGAS_API void egas_domain_free(egas_domain* d);
EGAS_API size_t egas_domain_size(const egas_domain* d);
/* Copies up to cap element ids in increasing order; *n receives the size. */
EGAS_API egas_status egas_domain_elements(const egas_domain* d, uint32_t* buf, size_t cap,
                                          size_t* n);
EGAS_API egas_status egas_domain_apply(const egas_domain* d, uint32_t c, uint32_t* out);
/* Whether a and b give function `fn` the same best correct approximation. */
EGAS_API egas_status egas_bca_equal(const egas_domain* a, const egas_domain* b, const char* fn,
                                    int* out);

enum {
  EGAS_KERNEL_ORACLE = 1,      /* also enumerate candidates and compare */
  EGAS_KERNEL_INEQUALITY = 2,       /* also report the inequality-form sets */
  EGAS_KERNEL_DISJUNCTIVE = 4  /* close under joins as well as meets */
};

/* Correctness kernel of d for the named functions. Only
 * EGAS_KERNEL_DISJUNCTIVE is honoured here. */
EGAS_API egas_status egas_kernel(const egas_domain* d, const char* const* fns, size_t nfns,
                                 unsigned flags, egas_domain** out);
EGAS_API egas_status egas_kernel_oracle(const egas_domain* d, const char* const* fns, size_t nfns,
                                        unsigned flags, egas_domain** out);

/* Transition systems, from the line format (states / label / edge / init /
 * error / block). */
EGAS_API egas_status egas_system_parse(const char* text, egas_system** out);
EGAS_API egas_status egas_system_load(const char* path, egas_system** out);
EGAS_API void egas_system_free(egas_system* s);
EGAS_API size_t egas_system_state_count(const egas_system* s);
EGAS_API size_t egas_system_block_count(const egas_system* s);
/* Partition kernel rendered as "{[1],[2,3]}". */
EGAS_API egas_status egas_partition_kernel(const egas_system* s, char** out);
/* Runs the refinement loop; heuristic is "basic" or "egas". *verdict gets
 * the final report line. */
EGAS_API egas_status egas_cegar(const egas_system* s, const char* heuristic, size_t* refinements,
                                char** verdict);
EGAS_API egas_status egas_dot_system(const egas_system* s, char** out);
EGAS_API egas_status egas_dot_lattice(const egas_lattice* l, char** out);

/* Reports behind the command-line tool. */
typedef struct egas_report_options {
  int json;            /* nonzero: JSON document instead of text */
  const char* dot_dir; /* optional: write DOT documents into this directory */
} egas_report_options;

/* *valid is 0 when the file parses but is not a lattice (or a function is
 * not monotone); the report is still produced. */
EGAS_API egas_status egas_report_lattice_check(const char* path, const egas_report_options* opt,
                                               char** out, int* valid);
/* domain: "full", a domain declared in the lattice file, or a path to a
 * file of `image` lines. */
EGAS_API egas_status egas_report_bca(const char* lattice_path, const char* domain,
                                     const char* const* fns, size_t nfns,
                                     const egas_report_options* opt, char** out);
EGAS_API egas_status egas_report_kernel(const char* lattice_path, const char* domain,
                                        const char* const* fns, size_t nfns, unsigned flags,
                                        const egas_report_options* opt, char** out);
EGAS_API egas_status egas_report_partition_kernel(const char* system_path, int iterate,
                                                  const egas_report_options* opt, char** out);
/* max_refinements < 0 means no cap beyond the state count. */
EGAS_API egas_status egas_report_cegar(const char* system_path, const char* heuristic,
                                       long long max_refinements, const egas_report_options* opt,
                                       char** out);

typedef struct egas_coro2_options {
  size_t max_len;   /* at most 6 */
  size_t random;    /* number of random systems, 0 for none */
  size_t states;    /* at most 12 */
  size_t blocks;
  double edge_prob;
  uint64_t seed;
} egas_coro2_options;

/* system_path may be NULL when random > 0. */
EGAS_API egas_status egas_report_coro2(const char* system_path, const egas_coro2_options* c,
                                       const egas_report_options* opt, char** out);
/* fixture "foo"; abstraction "boolean", "kernel", "uco-kernel" or
 * "cartesian". */
EGAS_API egas_status egas_report_predabs(const char* fixture, const char* abstraction,
                                         unsigned modulus, const egas_report_options* opt,
                                         char** out);

#ifdef __cplusplus
}
#endif

#endif /* EGAS_EGAS_H */

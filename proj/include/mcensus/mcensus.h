/*
 * Copyright 2026 The Matroid Census Authors.
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
 */

/*
 * C interface to libmatroid_census.
 *
 * All objects are opaque handles created by a *_build / *_enumerate / *_read
 * call and released with the matching *_free. Every fallible call returns an
 * mcensus_status; on failure a human-readable message is available from
 * mcensus_last_error() on the same thread until the next failing call.
 *
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with mcensus_string_free(). Strings inside row structs
 * (mcensus_bound_row, mcensus_row_violation, ...) are owned by the handle
 * they came from and stay valid until that handle is freed.
 *
 * Element sets are 64-bit masks: bit e set <=> element e is present.
 */

#ifndef MCENSUS_MCENSUS_H_
#define MCENSUS_MCENSUS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MCENSUS_API __declspec(dllexport)
#else
#define MCENSUS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcensus_status {
  MCENSUS_OK = 0,
  MCENSUS_INVALID_ARGUMENT = 1,
  MCENSUS_OUT_OF_RANGE = 2,
  MCENSUS_NOT_A_MATROID = 3,
  MCENSUS_PARSE_ERROR = 4,
  MCENSUS_IO_ERROR = 5,
  MCENSUS_BUDGET_EXCEEDED = 6,
  MCENSUS_INTERNAL_ERROR = 7
} mcensus_status;

typedef enum mcensus_method {
  MCENSUS_METHOD_NAIVE = 0,
  MCENSUS_METHOD_DFS = 1
} mcensus_method;

typedef struct mcensus_census mcensus_census;
typedef struct mcensus_counts mcensus_counts;
typedef struct mcensus_report mcensus_report;
typedef struct mcensus_diagnostics mcensus_diagnostics;

MCENSUS_API const char* mcensus_version(void);
MCENSUS_API const char* mcensus_status_name(mcensus_status status);
MCENSUS_API const char* mcensus_last_error(void);
MCENSUS_API void mcensus_string_free(char* s);

/* ---- census ------------------------------------------------------------ */

/* workers == 0 is treated as 1. The naive method refuses C(n,r) > 24. */
MCENSUS_API mcensus_status mcensus_census_enumerate(int n, int r, mcensus_method method,
                                                    unsigned workers, mcensus_census** out);
/* Strict load: format, order, empty family and the exchange axiom. */
MCENSUS_API mcensus_status mcensus_census_read(const char* path, mcensus_census** out);
MCENSUS_API mcensus_status mcensus_census_read_buffer(const char* data, size_t len,
                                                      mcensus_census** out);
MCENSUS_API mcensus_status mcensus_census_write(const mcensus_census* census, const char* path);
MCENSUS_API mcensus_status mcensus_census_serialize(const mcensus_census* census, char** text,
                                                    size_t* len);
MCENSUS_API int mcensus_census_n(const mcensus_census* census);
MCENSUS_API int mcensus_census_r(const mcensus_census* census);
/* Number of families including the empty one (m_{n,r} + 1). */
MCENSUS_API size_t mcensus_census_size(const mcensus_census* census);
MCENSUS_API mcensus_status mcensus_census_family_hex(const mcensus_census* census, size_t index,
                                                     char** hex);
MCENSUS_API void mcensus_census_free(mcensus_census* census);

/* ---- single families ------------------------------------------------------ */

typedef struct mcensus_violation {
  uint64_t base;
  uint64_t other;
  int element;
} mcensus_violation;

/* *is_matroid receives 1 when the family satisfies the exchange axiom;
 * otherwise 0 and, if witness is non-null, the first violation. */
MCENSUS_API mcensus_status mcensus_family_check(int n, int r, const char* hex, int* is_matroid,
                                                mcensus_violation* witness);
/* Contraction by the element set t_mask; the result lives on
 * (n - |T|, r - |T|) and is returned as hex. */
MCENSUS_API mcensus_status mcensus_family_contract(int n, int r, const char* hex, uint64_t t_mask,
                                                   char** result_hex);

typedef struct mcensus_rank2_decomposition {
  uint64_t loops;
  size_t block_count;
  uint64_t blocks[64];
} mcensus_rank2_decomposition;

MCENSUS_API mcensus_status mcensus_rank2_decompose(int n, const char* hex,
                                                   mcensus_rank2_decomposition* out);
MCENSUS_API mcensus_status mcensus_rank2_compose(const mcensus_rank2_decomposition* decomposition,
                                                 int n, char** hex);
/* 1 + sum over E0 of the partitions of the complement into >= 2 blocks,
 * counted by partition enumeration (decimal string). */
MCENSUS_API mcensus_status mcensus_rank2_partition_count(int n, char** decimal);
MCENSUS_API mcensus_status mcensus_bell_number(int n, char** decimal);

/* ---- entropy ------------------------------------------------------------- */

typedef struct mcensus_shearer_result {
  double lhs;
  double rhs;
  int holds;
  uint64_t multiplicity;
  size_t cover_size;
} mcensus_shearer_result;

MCENSUS_API mcensus_status mcensus_shearer(const mcensus_census* census, int t,
                                           mcensus_shearer_result* out);

/* ---- counts and bounds ------------------------------------------------------ */

/* Budget: max_n <= 7. */
MCENSUS_API mcensus_status mcensus_counts_build(int max_n, unsigned workers, mcensus_counts** out);
MCENSUS_API int mcensus_counts_max_n(const mcensus_counts* counts);
MCENSUS_API mcensus_status mcensus_counts_entry(const mcensus_counts* counts, int n, int r,
                                                char** decimal);
MCENSUS_API mcensus_status mcensus_counts_total(const mcensus_counts* counts, int n,
                                                char** decimal);
MCENSUS_API void mcensus_counts_free(mcensus_counts* counts);

typedef struct mcensus_bound_row {
  const char* name;
  int n; /* -1 when not applicable */
  int r;
  int t;
  const char* lhs; /* decimal */
  const char* rhs; /* decimal */
  int holds;
  const char* slack;
} mcensus_bound_row;

MCENSUS_API mcensus_status mcensus_report_build(const mcensus_counts* counts,
                                                mcensus_report** out);
MCENSUS_API size_t mcensus_report_size(const mcensus_report* report);
MCENSUS_API mcensus_status mcensus_report_row(const mcensus_report* report, size_t index,
                                              mcensus_bound_row* out);
MCENSUS_API int mcensus_report_all_hold(const mcensus_report* report);

typedef struct mcensus_asymptotic_row {
  int n;
  const char* m_n; /* decimal */
  double loglog_m;
  double upper_form;
  double knuth_form;
} mcensus_asymptotic_row;

/* Descriptive, verdict-free rows for n >= 2. */
MCENSUS_API size_t mcensus_report_asymptotic_size(const mcensus_report* report);
MCENSUS_API mcensus_status mcensus_report_asymptotic_row(const mcensus_report* report,
                                                         size_t index,
                                                         mcensus_asymptotic_row* out);
MCENSUS_API void mcensus_report_free(mcensus_report* report);

/* ---- file diagnostics ------------------------------------------------------- */

typedef struct mcensus_row_violation {
  size_t line;
  const char* hex;
  mcensus_violation witness;
} mcensus_row_violation;

/* Parses a census file (format errors -> MCENSUS_PARSE_ERROR with the line in
 * the message) and re-checks the axiom on every row. Axiom failures are
 * reported through the handle, not the status. */
MCENSUS_API mcensus_status mcensus_verify_file(const char* path, mcensus_diagnostics** out);
MCENSUS_API int mcensus_diagnostics_n(const mcensus_diagnostics* diagnostics);
MCENSUS_API int mcensus_diagnostics_r(const mcensus_diagnostics* diagnostics);
MCENSUS_API size_t mcensus_diagnostics_rows(const mcensus_diagnostics* diagnostics);
MCENSUS_API size_t mcensus_diagnostics_violation_count(const mcensus_diagnostics* diagnostics);
MCENSUS_API mcensus_status mcensus_diagnostics_violation(const mcensus_diagnostics* diagnostics,
                                                         size_t index,
                                                         mcensus_row_violation* out);
MCENSUS_API void mcensus_diagnostics_free(mcensus_diagnostics* diagnostics);

#ifdef __cplusplus
}
#endif

#endif /* MCENSUS_MCENSUS_H_ */

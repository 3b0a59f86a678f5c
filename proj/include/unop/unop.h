// Copyright 2026 The unop Authors
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

/*
 * C interface to the unop library.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function. Every fallible call returns a unop_status;
 * on failure unop_last_error() returns a message for the calling thread that
 * stays valid until that thread's next failing call.
 */
#ifndef UNOP_UNOP_H
#define UNOP_UNOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(UNOP_BUILDING_LIBRARY)
#define UNOP_API __attribute__((visibility("default")))
#else
#define UNOP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum unop_status {
    UNOP_OK = 0,
    UNOP_ERR_NULL_ARGUMENT = 1,
    UNOP_ERR_INVALID_ARGUMENT = 2,
    UNOP_ERR_OUT_OF_RANGE = 3,
    UNOP_ERR_INTERNAL = 4
} unop_status;

typedef enum unop_backend { UNOP_BACKEND_DENSE = 0, UNOP_BACKEND_SPARSE = 1 } unop_backend;

typedef enum unop_mode { UNOP_MODE_EXACT = 0, UNOP_MODE_SAMPLE = 1 } unop_mode;

/* Comparison of a device result with its classical brute-force reference. */
typedef enum unop_verdict {
    UNOP_VERDICT_MATCH = 0,      /* result set equals the reference set */
    UNOP_VERDICT_MISMATCH = 1,   /* some result is not in the reference set, or sets differ (exact) */
    UNOP_VERDICT_INCOMPLETE = 2, /* sampled results are valid but some reference elements were not observed */
    UNOP_VERDICT_SOUND = 3       /* product 0: every accepted pair multiplies to 0; completeness not asserted */
} unop_verdict;

typedef struct unop_run_options {
    unop_mode mode;
    unop_backend backend;
    uint64_t shots; /* sample mode only, >= 1 */
    uint64_t seed;  /* sample mode only */
    unsigned threads; /* sampling threads, 0 = hardware concurrency */
} unop_run_options;

/* Exact mode, sparse backend. */
UNOP_API void unop_run_options_init(unop_run_options *options);

UNOP_API const char *unop_version(void);
UNOP_API const char *unop_status_string(unop_status status);
UNOP_API const char *unop_last_error(void);
UNOP_API const char *unop_verdict_string(unop_verdict verdict);

/* ---- unaddition ------------------------------------------------------- */

typedef struct unop_triple {
    uint64_t a;
    uint64_t b;
    uint32_t c_in;
    double probability; /* exact mode */
    uint64_t count;     /* sample mode */
} unop_triple;

typedef struct unop_unadd_result unop_unadd_result;

UNOP_API unop_status unop_unadd(uint32_t n_bits, uint64_t sum, const unop_run_options *options,
                                unop_unadd_result **out);
UNOP_API size_t unop_unadd_result_size(const unop_unadd_result *result);
/* Triples are sorted by (a, b, c_in). */
UNOP_API unop_status unop_unadd_result_at(const unop_unadd_result *result, size_t i, unop_triple *out);
/* Cardinality of the reference set: 2N+1 for N >= 1, 1 for N = 0. */
UNOP_API uint64_t unop_unadd_result_expected_size(const unop_unadd_result *result);
UNOP_API unop_verdict unop_unadd_result_verdict(const unop_unadd_result *result);
UNOP_API void unop_unadd_result_free(unop_unadd_result *result);

/* ---- unmultiplication ------------------------------------------------- */

typedef enum unop_rejection {
    UNOP_REJECT_CONST0 = 0,       /* last RCU's b output is non-zero */
    UNOP_REJECT_CARRY = 1,        /* some RCU's c_in is non-zero */
    UNOP_REJECT_X_CONSISTENCY = 2 /* two non-zero x registers differ */
} unop_rejection;

typedef struct unop_factor_pair {
    uint64_t x;
    uint64_t y;
    double probability; /* exact: aggregated mass; sample: count / shots */
    uint64_t count;     /* sample mode */
} unop_factor_pair;

typedef struct unop_unmul_result unop_unmul_result;

UNOP_API unop_status unop_unmultiplier_wire_count(uint32_t n_bits, uint64_t *out);
UNOP_API unop_status unop_unmultiply(uint32_t n_bits, uint64_t product, const unop_run_options *options,
                                     unop_unmul_result **out);
UNOP_API size_t unop_unmul_result_size(const unop_unmul_result *result);
/* Pairs are sorted by (x, y). */
UNOP_API unop_status unop_unmul_result_at(const unop_unmul_result *result, size_t i, unop_factor_pair *out);
UNOP_API double unop_unmul_result_post_selection_probability(const unop_unmul_result *result);
UNOP_API unop_status unop_unmul_result_rejected(const unop_unmul_result *result, unop_rejection kind,
                                                double *probability, uint64_t *count);
UNOP_API size_t unop_unmul_result_outcomes_examined(const unop_unmul_result *result);
UNOP_API size_t unop_unmul_result_expected_size(const unop_unmul_result *result);
UNOP_API unop_verdict unop_unmul_result_verdict(const unop_unmul_result *result);
UNOP_API void unop_unmul_result_free(unop_unmul_result *result);

/* ---- full-unadder verification --------------------------------------- */

typedef struct unop_verify_options {
    uint64_t shots; /* 0 skips sampling checks */
    uint64_t seed;
    int tamper;     /* non-zero: add tamper_delta to matrix entry (tamper_row, tamper_col) */
    unsigned tamper_row;
    unsigned tamper_col;
    double tamper_delta;
} unop_verify_options;

typedef struct unop_verify_report unop_verify_report;

UNOP_API void unop_verify_options_init(unop_verify_options *options);
UNOP_API unop_status unop_verify(const unop_verify_options *options, unop_verify_report **out);
UNOP_API size_t unop_verify_report_size(const unop_verify_report *report);
/* Strings are owned by the report. */
UNOP_API unop_status unop_verify_report_check(const unop_verify_report *report, size_t i, const char **name,
                                              int *passed, const char **detail);
UNOP_API int unop_verify_report_all_passed(const unop_verify_report *report);
UNOP_API void unop_verify_report_free(unop_verify_report *report);

#ifdef __cplusplus
}
#endif

#endif /* UNOP_UNOP_H */

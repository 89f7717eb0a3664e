/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef STIRNUM_H
#define STIRNUM_H

/*
 * C interface to the stirnum shared library.
 *
 * Conventions:
 *   - every fallible call returns a stirnum_status; STIRNUM_OK is 0;
 *   - objects are returned through opaque handles and released with the
 *     matching *_free function;
 *   - strings returned through char** out-parameters are heap-allocated and
 *     must be released with stirnum_string_free;
 *   - family ids: s1, s1u, s2, ds1, ds2, ns1, ns1u, ns2;
 *   - table formats: csv, tsv, json, latex;
 *   - check names: theorem-2-1, theorem-3-1, theorem-2-2, inversion,
 *     gf-vs-conv, limit-lambda0, adell-lekuona.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stirnum_status {
    STIRNUM_OK = 0,
    STIRNUM_ERR_INVALID_ARGUMENT = 1, /* unknown name, bad configuration */
    STIRNUM_ERR_DOMAIN = 2,           /* mathematical precondition violated */
    STIRNUM_ERR_RANGE = 3,            /* index or truncation order out of range */
    STIRNUM_ERR_INTERNAL = 4
} stirnum_status;

/* Static string describing a status code. */
const char* stirnum_status_str(stirnum_status status);

/* Releases a string returned by any char** out-parameter below. */
void stirnum_string_free(char* s);

/* ---- triangles ---------------------------------------------------- */

typedef struct stirnum_triangle stirnum_triangle;

stirnum_status stirnum_triangle_build(const char* family, int max_n, stirnum_triangle** out);
void stirnum_triangle_free(stirnum_triangle* tri);
int stirnum_triangle_max_n(const stirnum_triangle* tri);

/* Entry (n,k) as ascending-power text, e.g. "11+18*l+11*l^2". */
stirnum_status stirnum_triangle_entry(const stirnum_triangle* tri, int n, int k, char** out_poly);

/* Degree of entry (n,k); the zero polynomial reports -1. */
stirnum_status stirnum_triangle_entry_degree(const stirnum_triangle* tri, int n, int k,
                                             int* out_degree);

/* Coefficient of lambda^power in entry (n,k) as "p/q" or "p". */
stirnum_status stirnum_triangle_entry_coeff(const stirnum_triangle* tri, int n, int k, int power,
                                            char** out_coeff);

stirnum_status stirnum_triangle_render(const stirnum_triangle* tri, const char* format,
                                       char** out_text);

/* Build + render in one call. */
stirnum_status stirnum_table_render(const char* family, int max_n, const char* format,
                                    char** out_text);

/* ---- identity checks ---------------------------------------------- */

/* Runs a named check up to max_n. *out_passed is 1/0; *out_json (optional,
 * may be NULL) receives the machine-readable result. */
stirnum_status stirnum_check_run(const char* name, int max_n, int* out_passed, char** out_json);

/* ---- Monte Carlo --------------------------------------------------- */

typedef struct stirnum_mc_config {
    int32_t k;         /* number of U*X summands, >= 1 */
    int32_t n;         /* degenerate-moment order, >= 0 */
    double lambda;     /* evaluation point */
    uint64_t samples;  /* >= 2 */
    uint64_t seed;
    uint32_t chunks;   /* worker threads; does not affect the estimate */
} stirnum_mc_config;

typedef struct stirnum_mc_report {
    double estimate;
    double std_error;
    double exact_value;
    double z_score;
    uint64_t samples_used;
} stirnum_mc_report;

/* Estimates E[(S_k)_{n,lambda}] against the exact series value. */
stirnum_status stirnum_mc_moment(const stirnum_mc_config* cfg, stirnum_mc_report* out_report,
                                 char** out_json);

/* Estimates the first-kind moment-sum identity (requires n >= k >= 1). */
stirnum_status stirnum_mc_theorem22(const stirnum_mc_config* cfg, stirnum_mc_report* out_report,
                                    char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* STIRNUM_H */

/*
   Copyright 2026 The prfq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PRFQ_PRFQ_H
#define PRFQ_PRFQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(PRFQ_BUILDING_LIBRARY)
#define PRFQ_API __attribute__((visibility("default")))
#else
#define PRFQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define PRFQ_SCHEMA_VERSION 1

typedef enum prfq_status {
    PRFQ_OK = 0,
    PRFQ_ERR_INVALID_ARGUMENT = 1,
    PRFQ_ERR_PARSE = 2,
    PRFQ_ERR_DOMAIN = 3,
    PRFQ_ERR_FIELD_MISMATCH = 4,
    PRFQ_ERR_OUT_OF_RANGE = 5, /* Carlitz formula used past k = q */
    PRFQ_ERR_BUDGET = 6,
    PRFQ_ERR_IO = 7,
    PRFQ_ERR_INTERNAL = 8
} prfq_status;

typedef enum prfq_sum_method {
    PRFQ_SUM_AUTO = 0,
    PRFQ_SUM_CLOSED = 1,
    PRFQ_SUM_BRUTE = 2
} prfq_sum_method;

typedef enum prfq_pr_method {
    PRFQ_PR_BRUTE = 0,
    PRFQ_PR_HERMITE = 1
} prfq_pr_method;

/* Fields are interned for the life of the process; handles need no release. */
typedef struct prfq_field prfq_field;
typedef struct prfq_ratfun prfq_ratfun;

typedef struct prfq_options {
    uint64_t budget;      /* 0 selects the operation's default */
    uint64_t samples;
    uint64_t seed;
    unsigned jobs;
    const char* data_dir; /* NULL or "" selects the built-in data directory */
} prfq_options;

/* Receives each finished acceptance criterion as JSON. */
typedef void (*prfq_progress_fn)(const char* criterion_json, void* user);

PRFQ_API const char* prfq_version(void);
PRFQ_API const char* prfq_status_string(prfq_status status);
/* Message of the last failed call on this thread; never NULL. */
PRFQ_API const char* prfq_last_error(void);
/* Releases strings returned through char** out-parameters. */
PRFQ_API void prfq_string_free(char* s);
PRFQ_API void prfq_options_init(prfq_options* options);

PRFQ_API prfq_status prfq_field_get(uint32_t p, uint32_t n, const prfq_field** out);
PRFQ_API prfq_status prfq_field_of_order(uint64_t q, const prfq_field** out);
/* modulus: monic, constant term first, length n + 1. */
PRFQ_API prfq_status prfq_field_with_modulus(uint32_t p, const uint32_t* modulus, size_t length,
                                             const prfq_field** out);
PRFQ_API uint32_t prfq_field_order(const prfq_field* field);
PRFQ_API uint32_t prfq_field_characteristic(const prfq_field* field);
PRFQ_API uint32_t prfq_field_degree(const prfq_field* field);
PRFQ_API prfq_status prfq_field_describe(const prfq_field* field, char** json);

/* Elements are their representations 0..q-1: base-p digits are the
   coefficients of the residue class of u. */
PRFQ_API prfq_status prfq_elem_parse(const prfq_field* field, const char* text, uint32_t* out);
PRFQ_API prfq_status prfq_elem_format(const prfq_field* field, uint32_t a, char** out);
PRFQ_API prfq_status prfq_elem_add(const prfq_field* field, uint32_t a, uint32_t b, uint32_t* out);
PRFQ_API prfq_status prfq_elem_sub(const prfq_field* field, uint32_t a, uint32_t b, uint32_t* out);
PRFQ_API prfq_status prfq_elem_mul(const prfq_field* field, uint32_t a, uint32_t b, uint32_t* out);
PRFQ_API prfq_status prfq_elem_inv(const prfq_field* field, uint32_t a, uint32_t* out);
PRFQ_API prfq_status prfq_elem_pow(const prfq_field* field, uint32_t a, uint64_t e, uint32_t* out);

PRFQ_API prfq_status prfq_ratfun_parse(const prfq_field* field, const char* text, prfq_ratfun** out);
PRFQ_API void prfq_ratfun_free(prfq_ratfun* f);
PRFQ_API const prfq_field* prfq_ratfun_field(const prfq_ratfun* f);
PRFQ_API int prfq_ratfun_degree(const prfq_ratfun* f);
PRFQ_API prfq_status prfq_ratfun_to_string(const prfq_ratfun* f, char** out);
/* Points of P^1 are indices 0..q-1 for field elements and q for infinity. */
PRFQ_API prfq_status prfq_ratfun_eval(const prfq_ratfun* f, uint32_t point, uint32_t* out);
/* out = f o g */
PRFQ_API prfq_status prfq_ratfun_compose(const prfq_ratfun* f, const prfq_ratfun* g, prfq_ratfun** out);
/* family: T3.3, T3.4, T3.9, YUAN, FORM3.2, FORM3.3, FORM3.6, FORM3.12.
   params: JSON object of element strings, e.g. {"r":"u","a":"2","epsilon":-1}.
   r is read in F_{q^3} for T3.9 and FORM3.12 and in F_{q^2} otherwise;
   c is read in F_{q^2}, b in F_{q^2} for FORM3.2, the rest in F_q. */
PRFQ_API prfq_status prfq_family_build(const char* family, uint32_t q, const char* params, prfq_ratfun** out);

PRFQ_API prfq_status prfq_carlitz_check(const prfq_field* field, unsigned k, int* holds);
PRFQ_API prfq_status prfq_power_sum(const prfq_ratfun* f, unsigned s, prfq_sum_method method, uint32_t* out);
PRFQ_API prfq_status prfq_is_pr(const prfq_ratfun* f, prfq_pr_method method, int* out);
/* witness (optional) receives {"outer":..,"inner":..} with f = outer o g o inner,
   or NULL when the functions are not equivalent. */
PRFQ_API prfq_status prfq_equivalent(const prfq_ratfun* f, const prfq_ratfun* g, int* out, char** witness);

/* JSON reports. passed (optional) receives the verdict. */
PRFQ_API prfq_status prfq_theorem_ids(char** json);
PRFQ_API prfq_status prfq_verify_theorem(const char* id, uint32_t q, const prfq_options* options, char** json,
                                         int* passed);
/* form: deg3-nonpoly, form3.6, form3.12 (or 3.3, 3.6, 3.12). degree 0 takes
   the degree from the form. with_golden adds the stored list comparison
   when one exists. */
PRFQ_API prfq_status prfq_classify(uint32_t q, int degree, const char* form, const prfq_options* options,
                                   int with_golden, char** json);
PRFQ_API prfq_status prfq_resultants(const char* data_dir, char** json, int* passed);
/* ids: criteria 1..9, all when count is 0. */
PRFQ_API prfq_status prfq_paper_check(const prfq_options* options, const int* ids, size_t count, int fail_fast,
                                      prfq_progress_fn progress, void* user, char** json, int* passed);

#ifdef __cplusplus
}
#endif

#endif

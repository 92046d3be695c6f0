// Copyright 2026 The expzero Authors
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

/* C interface to the expzero library. All handles are opaque. Functions
 * returning ez_status leave a message for ez_last_error() on failure; the
 * message is per thread. Strings handed out must be released with
 * ez_string_free. */

#ifndef EXPZERO_EXPZERO_H
#define EXPZERO_EXPZERO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EZ_API __declspec(dllexport)
#else
#define EZ_API __attribute__((visibility("default")))
#endif

typedef enum ez_status {
  EZ_OK = 0,
  EZ_ERR_INPUT = 1,    /* syntax, bad constants, wrong arguments */
  EZ_ERR_RESOURCE = 2, /* precision, degree or depth cap reached */
  EZ_ERR_INTERNAL = 3  /* invariant violation */
} ez_status;

typedef struct ez_context ez_context;
typedef struct ez_expr ez_expr;
typedef struct ez_zeros ez_zeros;

EZ_API const char* ez_version(void);

/* Message and error kind (e.g. "SyntaxError") of the last failure on this
 * thread; empty strings after a success. */
EZ_API const char* ez_last_error(void);
EZ_API const char* ez_last_error_kind(void);

EZ_API void ez_string_free(char* s);

/* Functions taking a const context accept NULL for the defaults. */
EZ_API ez_status ez_context_new(ez_context** out);
EZ_API void ez_context_free(ez_context* ctx);
EZ_API ez_status ez_context_set_precision(ez_context* ctx, int bits);
EZ_API ez_status ez_context_set_max_height(ez_context* ctx, int height);
EZ_API ez_status ez_context_set_numeric_check(ez_context* ctx, int enabled);
EZ_API ez_status ez_context_set_reproducible(ez_context* ctx, int enabled);

/* Expressions */
EZ_API ez_status ez_parse(const ez_context* ctx, const char* text, ez_expr** out);
EZ_API void ez_expr_free(ez_expr* e);
EZ_API ez_status ez_expr_print(const ez_expr* e, char** out);
EZ_API ez_status ez_expr_height(const ez_expr* e, int* out);
EZ_API ez_status ez_expr_depth(const ez_expr* e, int* out);
EZ_API ez_status ez_expr_is_zero(const ez_expr* e, int* out);
EZ_API ez_status ez_expr_equal(const ez_expr* a, const ez_expr* b, int* out);
EZ_API ez_status ez_expr_add(const ez_expr* a, const ez_expr* b, ez_expr** out);
EZ_API ez_status ez_expr_sub(const ez_expr* a, const ez_expr* b, ez_expr** out);
EZ_API ez_status ez_expr_mul(const ez_expr* a, const ez_expr* b, ez_expr** out);
EZ_API ez_status ez_expr_exp(const ez_expr* a, ez_expr** out);

/* Algebraic zeros */
EZ_API ez_status ez_zeros_find(const ez_context* ctx, const ez_expr* p, ez_zeros** out);
EZ_API ez_status ez_zeros_common(const ez_context* ctx, const ez_expr* p, const ez_expr* q, ez_zeros** out);
EZ_API void ez_zeros_free(ez_zeros* z);
EZ_API size_t ez_zeros_count(const ez_zeros* z);
/* The i-th zero as a rational or alg(...) literal. */
EZ_API ez_status ez_zeros_get(const ez_zeros* z, size_t i, char** out);
EZ_API ez_status ez_zeros_approx(const ez_zeros* z, size_t i, int digits, char** out);
EZ_API int ez_zeros_assumes_schanuel(const ez_zeros* z);
EZ_API int ez_zeros_complete(const ez_zeros* z);

/* Runs a command (normalize, height, depth, decompose, refine, zeros,
 * iszero, common-zeros, eval) and writes a JSON document to *out. On
 * failure *out, when non-null, holds an error document. */
EZ_API ez_status ez_run_command(const ez_context* ctx, const char* command, const char* const* args, size_t nargs,
                                int pretty, char** out);

#ifdef __cplusplus
}
#endif

#endif /* EXPZERO_EXPZERO_H */

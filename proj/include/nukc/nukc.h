// Copyright 2026 The nukc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the nukc solver library.
 *
 * Objects are opaque and owned by the caller once returned; release them with
 * the matching *_free function. Every call that can fail returns a
 * nukc_status and records a message retrievable with nukc_last_error() on the
 * calling thread. Strings returned through char** out-parameters are
 * heap-allocated and must be released with nukc_string_free().
 */
#ifndef NUKC_NUKC_H_
#define NUKC_NUKC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NUKC_BUILDING_LIBRARY)
#    define NUKC_API __declspec(dllexport)
#  else
#    define NUKC_API __declspec(dllimport)
#  endif
#else
#  define NUKC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nukc_status {
  NUKC_OK = 0,
  NUKC_INVALID_ARGUMENT = 1,
  NUKC_METRIC_VIOLATION = 2,
  NUKC_SCHEMA = 3,
  NUKC_STALLED = 4,
  NUKC_ITERATION_LIMIT = 5,
  NUKC_CAP_EXCEEDED = 6,
  NUKC_CONTRACT_VIOLATION = 7,
  NUKC_LAMINAR_VIOLATION = 8,
  NUKC_INTERNAL = 9,
  NUKC_IO = 10,
  NUKC_UNKNOWN = 99
} nukc_status;

typedef enum nukc_outcome {
  NUKC_OUTCOME_SOLUTION = 0,
  NUKC_OUTCOME_INFEASIBLE = 1, /* certified infeasible at dilation 1 */
  NUKC_OUTCOME_NOT_FOUND = 2   /* no solution, not certified */
} nukc_outcome;

typedef struct nukc_instance nukc_instance;
typedef struct nukc_result nukc_result;

typedef struct nukc_solve_options {
  const char* algorithm; /* NULL or "auto", "robust2", "contracted", "nukc2",
                            "nukc3", "kcenter", "robust-kcenter" */
  double dilation;       /* fixed scale; ignored with binary_search */
  int binary_search;
  int linear_scan;       /* with binary_search: scan candidates in order */
  long max_lp_solves;    /* 0 = default */
} nukc_solve_options;

NUKC_API void nukc_solve_options_init(nukc_solve_options* options);

NUKC_API const char* nukc_last_error(void);
NUKC_API const char* nukc_status_name(nukc_status status);
NUKC_API void nukc_string_free(char* s);

NUKC_API nukc_status nukc_instance_from_json(const char* json,
                                             nukc_instance** out);
NUKC_API nukc_status nukc_instance_from_file(const char* path,
                                             nukc_instance** out);
NUKC_API void nukc_instance_free(nukc_instance* instance);
NUKC_API size_t nukc_instance_point_count(const nukc_instance* instance);
NUKC_API size_t nukc_instance_class_count(const nukc_instance* instance);
NUKC_API int64_t nukc_instance_coverage_target(const nukc_instance* instance);

/* Deterministic random Euclidean instance as JSON. classes is "k1:r1,k2:r2";
 * target < 0 selects all points. */
NUKC_API nukc_status nukc_generate(uint64_t seed, size_t n,
                                   const char* classes, int planted,
                                   int64_t target, char** out_json);

NUKC_API nukc_status nukc_solve(const nukc_instance* instance,
                                const nukc_solve_options* options,
                                nukc_result** out);
NUKC_API void nukc_result_free(nukc_result* result);
NUKC_API nukc_outcome nukc_result_outcome(const nukc_result* result);
NUKC_API int nukc_result_dilation_tag(const nukc_result* result);
NUKC_API double nukc_result_lambda(const nukc_result* result);
NUKC_API size_t nukc_result_ball_count(const nukc_result* result);
NUKC_API nukc_status nukc_result_ball(const nukc_result* result, size_t i,
                                      size_t* center, size_t* class_index,
                                      double* radius);
/* Owned by the result. */
NUKC_API const char* nukc_result_report_json(const nukc_result* result);

/* Checks a solution document against the instance. feasible receives 1 iff
 * the coverage target is met within budgets and center restrictions. */
NUKC_API nukc_status nukc_verify(const nukc_instance* instance,
                                 const char* solution_json, int* feasible,
                                 char** out_report_json);

/* LP relaxation of a two-class instance scaled by dilation, in LP format. */
NUKC_API nukc_status nukc_dump_lp(const nukc_instance* instance,
                                  double dilation, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* NUKC_NUKC_H_ */

/* guard2d C API: deploy k circular-range sensors to guard polygon perimeters or regions. */

#ifndef GUARD2D_H
#define GUARD2D_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
typedef enum Guard2dStatus {
  GUARD2D_STATUS_OK = 0,
  GUARD2D_STATUS_NULL_ARGUMENT = 1,
  GUARD2D_STATUS_INVALID_UTF8 = 2,
  GUARD2D_STATUS_PARSE_ERROR = 3,
  GUARD2D_STATUS_INVALID_ARGUMENT = 4,
  GUARD2D_STATUS_BUDGET_EXHAUSTED = 5,
  GUARD2D_STATUS_SOLVE_FAILED = 6,
  GUARD2D_STATUS_INDEX_OUT_OF_RANGE = 7,
} Guard2dStatus;

// Solver selector for [`guard2d_solve`].
typedef enum Guard2dMethod {
  GUARD2D_METHOD_CONT = 0,
  GUARD2D_METHOD_GONZALEZ = 1,
  GUARD2D_METHOD_ILP = 2,
} Guard2dMethod;

// Opaque parsed problem document.
typedef struct Guard2dProblem Guard2dProblem;

// Opaque solved deployment plus the sample set it covers.
typedef struct Guard2dSolution Guard2dSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent error on this thread. The pointer
// stays valid until the next failing call on the same thread.
const char *guard2d_last_error(void);

// Parses a UTF-8 problem document into a handle stored in `out`.
//
// # Safety
// `json` must point to a NUL-terminated string and `out` to writable
// pointer storage; both are only borrowed for the duration of the call.
enum Guard2dStatus guard2d_problem_parse(const char *json, struct Guard2dProblem **out);

// Releases a problem handle. NULL is ignored.
//
// # Safety
// `p` must come from [`guard2d_problem_parse`] and not be freed twice.
void guard2d_problem_free(struct Guard2dProblem *p);

// Sensor count stored in the problem document; 0 for NULL.
//
// # Safety
// `p` must be a live problem handle or NULL.
size_t guard2d_problem_k(const struct Guard2dProblem *p);

// Solves a problem with the selected method. `node_budget = 0` keeps the
// default. On success `out` receives a solution handle.
//
// # Safety
// `problem` must be a live problem handle and `out` writable pointer
// storage.
enum Guard2dStatus guard2d_solve(const struct Guard2dProblem *problem,
                                 enum Guard2dMethod method,
                                 uint64_t seed,
                                 uint64_t node_budget,
                                 struct Guard2dSolution **out);

// Releases a solution handle. NULL is ignored.
//
// # Safety
// `s` must come from [`guard2d_solve`] and not be freed twice.
void guard2d_solution_free(struct Guard2dSolution *s);

// Achieved common sensing radius; NaN for a NULL handle.
//
// # Safety
// `s` must be a live solution handle or NULL.
double guard2d_solution_radius(const struct Guard2dSolution *s);

// Number of deployed sensors; 0 for a NULL handle.
//
// # Safety
// `s` must be a live solution handle or NULL.
size_t guard2d_solution_center_count(const struct Guard2dSolution *s);

// Writes the i-th sensor position into `x`/`y`.
//
// # Safety
// `s` must be a live solution handle; `x` and `y` must be writable.
enum Guard2dStatus guard2d_solution_center(const struct Guard2dSolution *s,
                                           size_t index,
                                           double *x,
                                           double *y);

// 1 when the deployment covers every sample within its radius, else 0.
//
// # Safety
// `s` must be a live solution handle or NULL.
int32_t guard2d_solution_verified(const struct Guard2dSolution *s);

// Solution document (JSON, includes the verification summary) as a newly
// allocated string; NULL on failure. Free with [`guard2d_string_free`].
//
// # Safety
// `s` must be a live solution handle or NULL.
char *guard2d_solution_to_json(const struct Guard2dSolution *s);

// SVG rendering of the solution over its workspace as a newly allocated
// string; samples drawn when `include_samples` is nonzero. Free with
// [`guard2d_string_free`].
//
// # Safety
// `s` must be a live solution handle or NULL.
char *guard2d_solution_render_svg(const struct Guard2dSolution *s, int32_t include_samples);

// Releases a string produced by this library. NULL is ignored.
//
// # Safety
// `s` must come from a guard2d function returning `char*` and not be freed
// twice.
void guard2d_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GUARD2D_H */

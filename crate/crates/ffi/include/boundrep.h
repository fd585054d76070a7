#ifndef BOUNDREP_H
#define BOUNDREP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define BR_OK 0

#define BR_UNSAT 1

#define BR_ERR_NULL -1

#define BR_ERR_UTF8 -2

#define BR_ERR_PARSE -3

#define BR_ERR_CLASS -4

#define BR_ERR_PANIC -5

/**
 * Parsed instance.
 */
typedef struct BrInstance BrInstance;

/**
 * Solver answer with its JSON document.
 */
typedef struct BrResult BrResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *br_status_message(int32_t code);

/**
 * Parses an instance document into `*out`. The caller frees it with `br_instance_free`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
int32_t br_instance_from_json(const char *json, struct BrInstance **out);

/**
 * # Safety
 * `inst` must come from `br_instance_from_json` and not be freed twice. Null is ignored.
 */
void br_instance_free(struct BrInstance *inst);

/**
 * Vertex count, 0 for null.
 *
 * # Safety
 * `inst` must be null or a live handle.
 */
size_t br_instance_vertex_count(const struct BrInstance *inst);

/**
 * Switches the class: `"int"` or `"proper-int"`.
 *
 * # Safety
 * `inst` must be a live handle and `class` a NUL-terminated string.
 */
int32_t br_instance_set_class(struct BrInstance *inst, const char *class_);

/**
 * Solves for the instance's class. Returns `BR_OK` or `BR_UNSAT` with `*out` set either way.
 *
 * # Safety
 * `inst` must be a live handle and `out` a valid pointer.
 */
int32_t br_solve(const struct BrInstance *inst, struct BrResult **out);

/**
 * # Safety
 * `res` must be null or a live handle.
 */
bool br_result_is_sat(const struct BrResult *res);

/**
 * JSON answer, owned by the result and valid until `br_result_free`.
 *
 * # Safety
 * `res` must be null or a live handle.
 */
const char *br_result_json(const struct BrResult *res);

/**
 * # Safety
 * `res` must come from `br_solve` and not be freed twice. Null is ignored.
 */
void br_result_free(struct BrResult *res);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOUNDREP_H */

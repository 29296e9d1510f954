#ifndef POSET_TENSE_H
#define POSET_TENSE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Operator code for `P`, accepted by [`pt_tense`] and [`pt_compose`].
 */
#define PT_OP_P 0

/**
 * Operator code for `F`.
 */
#define PT_OP_F 1

/**
 * Operator code for `H`.
 */
#define PT_OP_H 2

/**
 * Operator code for `G`.
 */
#define PT_OP_G 3

typedef enum PtStatus {
  PT_STATUS_OK = 0,
  PT_STATUS_NULL_ARGUMENT = 1,
  PT_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed text or an unknown name.
   */
  PT_STATUS_PARSE_ERROR = 3,
  /**
   * Well-formed input describing an invalid structure.
   */
  PT_STATUS_VALIDATION_ERROR = 4,
  /**
   * A property suite found a counterexample.
   */
  PT_STATUS_COUNTEREXAMPLE = 5,
  PT_STATUS_UNKNOWN_OPERATOR = 6,
  PT_STATUS_INTERNAL = 7,
} PtStatus;

/**
 * A parsed instance file.
 */
typedef struct PtInstance PtInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *pt_last_error(void);

/**
 * Releases a string returned through an output parameter. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void pt_string_free(char *s);

/**
 * Parses instance text into a new handle stored in `*out`.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PtStatus pt_instance_parse(const char *src, struct PtInstance **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must come from [`pt_instance_parse`] and not have been freed.
 */
void pt_instance_free(struct PtInstance *h);

/**
 * Canonical instance text.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum PtStatus pt_instance_serialize(const struct PtInstance *h, char **out);

/**
 * The instance as JSON.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum PtStatus pt_instance_to_json(const struct PtInstance *h, char **out);

/**
 * Validates every declared structure. Returns `VALIDATION_ERROR` if any is
 * invalid; `*report` (if not null) receives the per-item JSON array.
 *
 * # Safety
 * `h` must be a live handle; `report` may be null.
 */
enum PtStatus pt_instance_check(const struct PtInstance *h, char **report);

/**
 * `op(family)` rendered as labelled antichains, e.g. `[a, {e,f}, {e,f}]`.
 * `family` is a declared family, a prop name, or an inline list `{p,q}`.
 *
 * # Safety
 * `h` must be a live handle, `family` a NUL-terminated string, `out` valid.
 */
enum PtStatus pt_tense(const struct PtInstance *h, const char *family, uint32_t op, char **out);

/**
 * `(outer * inner)(family)`, rendered like [`pt_tense`].
 *
 * # Safety
 * As for [`pt_tense`].
 */
enum PtStatus pt_compose(const struct PtInstance *h,
                         const char *family,
                         uint32_t outer,
                         uint32_t inner,
                         char **out);

/**
 * Runs comma-separated property suites (`"all"` for every suite) and
 * stores the JSON report in `*report`. `input` may be null; otherwise its
 * cases run before the generated ones. Returns `COUNTEREXAMPLE` when any
 * property fails; the report is written either way.
 *
 * # Safety
 * `suite_list` must be a NUL-terminated string, `input` null or a live handle,
 * `report` a valid pointer.
 */
enum PtStatus pt_verify(const char *suite_list,
                        uint64_t seed,
                        size_t cases,
                        const struct PtInstance *input,
                        char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POSET_TENSE_H */

#ifndef EUDOXUS_H
#define EUDOXUS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EudoxusStatus {
  EUDOXUS_STATUS_OK = 0,
  EUDOXUS_STATUS_NULL_POINTER = 1,
  EUDOXUS_STATUS_INVALID_UTF8 = 2,
  EUDOXUS_STATUS_SYNTAX = 3,
  /**
   * A sign could not be certified within the fuel budget.
   */
  EUDOXUS_STATUS_INCONCLUSIVE = 4,
  EUDOXUS_STATUS_INVALID_ARGUMENT = 5,
  EUDOXUS_STATUS_PANIC = 6,
} EudoxusStatus;

/**
 * An exact real. Thread-safe; share it freely but free it exactly once.
 */
typedef struct EudoxusReal EudoxusReal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call on the same thread; do not free.
 */
const char *eudoxus_last_error(void);

/**
 * Parses and lowers an expression such as `cf[1;(2)*] / 3`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string and `out` a writable pointer.
 */
enum EudoxusStatus eudoxus_parse(const char *expr,
                                 uint32_t fuel_doublings,
                                 struct EudoxusReal **out);

/**
 * # Safety
 * `out` must be a writable pointer.
 */
enum EudoxusStatus eudoxus_from_int(int64_t k, struct EudoxusReal **out);

/**
 * # Safety
 * `out` must be a writable pointer.
 */
enum EudoxusStatus eudoxus_from_ratio(int64_t p, int64_t q, struct EudoxusReal **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a writable pointer.
 */
enum EudoxusStatus eudoxus_add(const struct EudoxusReal *a,
                               const struct EudoxusReal *b,
                               struct EudoxusReal **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a writable pointer.
 */
enum EudoxusStatus eudoxus_mul(const struct EudoxusReal *a,
                               const struct EudoxusReal *b,
                               struct EudoxusReal **out);

/**
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum EudoxusStatus eudoxus_neg(const struct EudoxusReal *a, struct EudoxusReal **out);

/**
 * Returns `EUDOXUS_STATUS_INCONCLUSIVE` when the sign of `a` is not
 * certified within the budget.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum EudoxusStatus eudoxus_invert(const struct EudoxusReal *a,
                                  uint32_t fuel_doublings,
                                  struct EudoxusReal **out);

/**
 * Writes 1 or -1 on a certified sign. An inconclusive search writes 0 and
 * returns `EUDOXUS_STATUS_INCONCLUSIVE`.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum EudoxusStatus eudoxus_sign(const struct EudoxusReal *a, uint32_t fuel_doublings, int32_t *out);

/**
 * Certified decimal such as `1.4142 ±1e-4`.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum EudoxusStatus eudoxus_to_decimal(const struct EudoxusReal *a, uint32_t digits, char **out);

/**
 * The certified defect bound, in decimal.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum EudoxusStatus eudoxus_defect_bound(const struct EudoxusReal *a, char **out);

/**
 * Runs one calculator command line such as `saturate 6, 10`. The text and
 * the calculator's exit code (0, 1 or 2) are written out; the status only
 * reports problems with the call itself.
 *
 * # Safety
 * `line` must be a NUL-terminated string; `out_text` and `out_code` must be
 * writable pointers.
 */
enum EudoxusStatus eudoxus_execute(const char *line,
                                   uint32_t fuel_doublings,
                                   uint32_t digits,
                                   char **out_text,
                                   int32_t *out_code);

/**
 * # Safety
 * `r` must be NULL or a handle from this library not yet freed.
 */
void eudoxus_real_free(struct EudoxusReal *r);

/**
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void eudoxus_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EUDOXUS_H */

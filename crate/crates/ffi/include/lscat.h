#ifndef LSCAT_H
#define LSCAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LscatStatus {
  LSCAT_STATUS_OK = 0,
  LSCAT_STATUS_NULL_POINTER = 1,
  LSCAT_STATUS_INVALID_UTF8 = 2,
  LSCAT_STATUS_PARSE_ERROR = 3,
  LSCAT_STATUS_BAD_LENS_PARAMS = 4,
  LSCAT_STATUS_NO_TRIANGULATION = 5,
  LSCAT_STATUS_NON_ORIENTABLE = 6,
  LSCAT_STATUS_COMPUTATION_ERROR = 7,
  LSCAT_STATUS_INVALID_ARGUMENT = 8,
  LSCAT_STATUS_PANIC = 9,
} LscatStatus;

typedef enum LscatDetect {
  LSCAT_DETECT_DETECTABLE = 0,
  LSCAT_DETECT_UNKNOWN = 1,
  LSCAT_DETECT_NOT_APPLICABLE = 2,
} LscatDetect;

/*
 A normalized connected-sum expression.
 */
typedef struct LscatExpr LscatExpr;

/*
 A category value with its certificate.
 */
typedef struct LscatResult LscatResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failure (or certificate rejection) on this thread.
 The pointer stays valid until the next failing call on this thread.
 */
const char *lscat_last_error(void);

/*
 Parses and normalizes a connected-sum expression such as `"L(5,1) # T3"`.

 # Safety
 `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LscatStatus lscat_expr_parse(const char *text, struct LscatExpr **out);

/*
 Normal form of an expression as a new string.

 # Safety
 `expr` must come from [`lscat_expr_parse`].
 */
char *lscat_expr_to_string(const struct LscatExpr *expr);

/*
 # Safety
 `expr` must come from [`lscat_expr_parse`] and not be used afterwards.
 */
void lscat_expr_free(struct LscatExpr *expr);

/*
 Category of an expression.

 # Safety
 `expr` must come from [`lscat_expr_parse`]; `out` must be valid.
 */
enum LscatStatus lscat_category(const struct LscatExpr *expr, struct LscatResult **out);

/*
 Category of `M × S^n`.

 # Safety
 As [`lscat_category`].
 */
enum LscatStatus lscat_ganea(const struct LscatExpr *expr, size_t n, struct LscatResult **out);

/*
 Category of a triangulated closed 3-manifold given as DCX text.

 # Safety
 `dcx` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LscatStatus lscat_category_dcx(const char *dcx, struct LscatResult **out);

/*
 Lower and upper bounds; equal when the value is exact.

 # Safety
 `result` must come from a category call; `lo` and `hi` must be valid.
 */
enum LscatStatus lscat_result_bounds(const struct LscatResult *result, size_t *lo, size_t *hi);

/*
 Detectability verdict carried by a result.

 # Safety
 `result` must come from a category call.
 */
enum LscatDetect lscat_result_detect(const struct LscatResult *result);

/*
 Certificate text of a result as a new string.

 # Safety
 `result` must come from a category call.
 */
char *lscat_result_certificate(const struct LscatResult *result);

/*
 # Safety
 `result` must come from a category call and not be used afterwards.
 */
void lscat_result_free(struct LscatResult *result);

/*
 Parses and checks certificate text; `*accepted` receives the verdict.
 Diagnostics of a rejected certificate are available from
 [`lscat_last_error`].

 # Safety
 `text` must be a NUL-terminated string and `accepted` a valid pointer.
 */
enum LscatStatus lscat_check_certificate(const char *text, bool *accepted);

/*
 Structural detectability verdict for an expression.

 # Safety
 `expr` must come from [`lscat_expr_parse`].
 */
enum LscatDetect lscat_detect(const struct LscatExpr *expr);

/*
 # Safety
 `s` must come from this library and not be used afterwards.
 */
void lscat_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LSCAT_H */

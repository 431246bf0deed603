#ifndef QPOINCARE_H
#define QPOINCARE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QpFormat {
  QP_FORMAT_TEXT = 0,
  QP_FORMAT_JSON = 1,
  QP_FORMAT_CSV = 2,
} QpFormat;

typedef enum QpGauge {
  /**
   * The state's default gauge.
   */
  QP_GAUGE_DEFAULT = 0,
  QP_GAUGE_RATIONAL = 1,
  QP_GAUGE_HERMITIAN = 2,
} QpGauge;

typedef enum QpStatus {
  QP_STATUS_OK = 0,
  QP_STATUS_NULL_POINTER = 1,
  QP_STATUS_INVALID_UTF8 = 2,
  QP_STATUS_PARSE = 3,
  QP_STATUS_COMPUTE = 4,
  QP_STATUS_PANIC = 5,
} QpStatus;

/**
 * A state together with the module it lives in.
 */
typedef struct QpState QpState;

/**
 * The normal-ordering engine.
 */
typedef struct QpSystem QpSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * Valid until the next call on the same thread.
 */
const char *qp_last_error(void);

/**
 * Library version string; static, do not free.
 */
const char *qp_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qp_string_free(char *s);

/**
 * Builds (once per process) and returns the rewrite system.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum QpStatus qp_system_new(struct QpSystem **out);

/**
 * # Safety
 * `sys` must come from [`qp_system_new`] or be null.
 */
void qp_system_free(struct QpSystem *sys);

/**
 * Number of rewrite rules.
 *
 * # Safety
 * `sys` and `out` must be valid.
 */
enum QpStatus qp_system_rule_count(const struct QpSystem *sys, uintptr_t *out);

/**
 * Normal form of an expression over letters, scalar symbols and
 * observable names.
 *
 * # Safety
 * `sys`, `expr` and `out` must be valid; `expr` NUL-terminated.
 */
enum QpStatus qp_normal_form(const struct QpSystem *sys, const char *expr, char **out);

/**
 * Builds a state from a description such as `rest(M,1/2)`, `pi(3)` or
 * `S(2)`.
 *
 * # Safety
 * `sys`, `spec` and `out` must be valid.
 */
enum QpStatus qp_state_new(const struct QpSystem *sys,
                           const char *spec,
                           enum QpGauge gauge,
                           struct QpState **out);

/**
 * # Safety
 * `st` must come from this library or be null.
 */
void qp_state_free(struct QpState *st);

/**
 * Expansion of the state in the Γ-word basis.
 *
 * # Safety
 * `st` and `out` must be valid.
 */
enum QpStatus qp_state_to_string(const struct QpState *st, char **out);

/**
 * Applies an operator and returns the result as a new state.
 *
 * # Safety
 * `st`, `op` and `out` must be valid.
 */
enum QpStatus qp_state_apply(const struct QpState *st, const char *op, struct QpState **out);

/**
 * Tests the state against an operator. On success `is_eigen` is set and,
 * for eigenstates, `eigenvalue` receives the eigenvalue; otherwise it is
 * set to null.
 *
 * # Safety
 * `st`, `op`, `is_eigen` and `eigenvalue` must be valid.
 */
enum QpStatus qp_eigencheck(const struct QpState *st,
                            const char *op,
                            bool *is_eigen,
                            char **eigenvalue);

/**
 * Runs a verification suite (or `all`) and returns the report. `passed`
 * is false when any check failed.
 *
 * # Safety
 * `suite`, `passed` and `out` must be valid.
 */
enum QpStatus qp_verify(const char *suite, enum QpFormat format, bool *passed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QPOINCARE_H */

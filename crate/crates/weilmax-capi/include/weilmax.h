#ifndef WEILMAX_H
#define WEILMAX_H

/* Generated by cbindgen from the weilmax-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible binding.
 */
typedef enum WmStatus {
  /**
   * The call succeeded.
   */
  WM_STATUS_OK = 0,
  /**
   * An argument was null, unparseable, or out of range.
   */
  WM_STATUS_BAD_ARGUMENT = 1,
  /**
   * The inputs were well formed but outside the supported domain,
   * e.g. a q that is not an even prime power.
   */
  WM_STATUS_UNSUPPORTED = 2,
  /**
   * An internal invariant failed; the library state is still sound.
   */
  WM_STATUS_INTERNAL = 3,
} WmStatus;

/**
 * Opaque isogeny class handle.
 */
typedef struct WmClass WmClass;

/**
 * Opaque scan result handle.
 */
typedef struct WmScan WmScan;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Writes the trace-minimal polynomial of dimension `g` to `*out` as a
 * coefficient list. The search is capped at dimension 6.
 *
 * # Safety
 * `out` must be a valid pointer; the result is released with `wm_string_free`.
 */
enum WmStatus wm_trace_polynomial(size_t g, char **out);

/**
 * Writes the cyclicity invariant N_g to `*out` as a decimal string.
 *
 * # Safety
 * `out` must be a valid pointer; the result is released with `wm_string_free`.
 */
enum WmStatus wm_cyclicity_invariant(size_t g, char **out);

/**
 * Constructs the point-count-maximal class of dimension `g` over F_q.
 * `q` is a decimal string and must be an even prime power above the
 * dimension-dependent size threshold.
 *
 * # Safety
 * `q` must be a valid NUL-terminated string and `out` a valid pointer;
 * the handle is released with `wm_class_free`.
 */
enum WmStatus wm_maximal_class(size_t g, const char *q, struct WmClass **out);

/**
 * Constructs the point-count-minimal class of dimension `g` over F_q.
 *
 * # Safety
 * Same contract as `wm_maximal_class`.
 */
enum WmStatus wm_minimal_class(size_t g, const char *q, struct WmClass **out);

/**
 * Runs the exhaustive squarefree scan in dimension 3 over F_q.
 *
 * # Safety
 * `q` must be a valid NUL-terminated string and `out` a valid pointer;
 * the handle is released with `wm_scan_free`.
 */
enum WmStatus wm_scan_threefolds(const char *q, struct WmScan **out);

/**
 * Copies the scan's point-count-maximal field class into a new handle.
 *
 * # Safety
 * `scan` must come from `wm_scan_threefolds`; `out` must be valid.
 */
enum WmStatus wm_scan_best(const struct WmScan *scan, struct WmClass **out);

/**
 * Number of squarefree classes that beat the best field class, or -1 on
 * a null handle.
 *
 * # Safety
 * `scan` must be null or come from `wm_scan_threefolds`.
 */
int wm_scan_exceeder_count(const struct WmScan *scan);

/**
 * Copies the exceeder at `index` (most points first) into a new handle.
 *
 * # Safety
 * `scan` must come from `wm_scan_threefolds`; `out` must be valid.
 */
enum WmStatus wm_scan_exceeder(const struct WmScan *scan, size_t index, struct WmClass **out);

/**
 * Releases a scan handle. Null is ignored.
 *
 * # Safety
 * `scan` must be null or an unreleased handle from this library.
 */
void wm_scan_free(struct WmScan *scan);

/**
 * The class's label, e.g. "3.4.h_ba_cl", or null on a null handle.
 *
 * # Safety
 * `class` must be null or an unreleased handle from this library.
 */
char *wm_class_label(const struct WmClass *class_);

/**
 * The class's Weil polynomial as a coefficient list, constant term first.
 *
 * # Safety
 * `class` must be null or an unreleased handle from this library.
 */
char *wm_class_polynomial(const struct WmClass *class_);

/**
 * The class's real Weil polynomial as a coefficient list.
 *
 * # Safety
 * `class` must be null or an unreleased handle from this library.
 */
char *wm_class_real_polynomial(const struct WmClass *class_);

/**
 * The class's rational point count as a decimal string.
 *
 * # Safety
 * `class` must be null or an unreleased handle from this library.
 */
char *wm_class_points(const struct WmClass *class_);

/**
 * A human-readable name of the class's extremal structure, e.g. "M_3^0(4)".
 *
 * # Safety
 * `class` must be null or an unreleased handle from this library.
 */
char *wm_class_tag(const struct WmClass *class_);

/**
 * The primes at which the group of rational points can fail to be cyclic,
 * as a comma-separated list; the empty string means cyclic at all primes.
 *
 * # Safety
 * `class` must be null or an unreleased handle from this library.
 */
char *wm_class_exceptions(const struct WmClass *class_);

/**
 * The class's dimension, or 0 on a null handle.
 *
 * # Safety
 * `class` must be null or an unreleased handle from this library.
 */
size_t wm_class_dimension(const struct WmClass *class_);

/**
 * 1 when the class is ordinary, 0 when not, -1 on a null handle.
 *
 * # Safety
 * `class` must be null or an unreleased handle from this library.
 */
int wm_class_is_ordinary(const struct WmClass *class_);

/**
 * Releases a class handle. Null is ignored.
 *
 * # Safety
 * `class` must be null or an unreleased handle from this library.
 */
void wm_class_free(struct WmClass *class_);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or an unreleased string from this library.
 */
void wm_string_free(char *s);

/**
 * A copy of the message for the most recent non-ok status on this thread,
 * or null when the last call succeeded.
 */
char *wm_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WEILMAX_H */

#ifndef SPINMTC_H
#define SPINMTC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

/**
 * Result of every call.
 */
typedef enum SpinmtcStatus {
  SPINMTC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SPINMTC_STATUS_NULL_ARGUMENT = 1,
  SPINMTC_STATUS_INVALID_UTF8 = 2,
  /**
   * Unparseable data, unknown label or key, invalid parameters.
   */
  SPINMTC_STATUS_MALFORMED = 3,
  /**
   * The input parsed but a structural check failed; any report was
   * still written.
   */
  SPINMTC_STATUS_CHECK_FAILED = 4,
  /**
   * A bug inside the library; the message is in `spinmtc_last_error`.
   */
  SPINMTC_STATUS_INTERNAL = 5,
} SpinmtcStatus;

/**
 * Opaque handle to a category.
 */
typedef struct SpinmtcCategory SpinmtcCategory;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or "" after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *spinmtc_last_error(void);

/**
 * Library version as a static string.
 */
const char *spinmtc_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void spinmtc_string_free(char *s);

/**
 * Parse a fusion data file.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SpinmtcStatus spinmtc_category_from_json(const char *json, struct SpinmtcCategory **out);

/**
 * One of "trivial", "fermion", "dirac", "toric", "fibonacci".
 *
 * # Safety
 * `key` must be a NUL-terminated string; `out` must be writable.
 */
enum SpinmtcStatus spinmtc_category_builtin(const char *key, struct SpinmtcCategory **out);

/**
 * Deligne product `a ⊠ b` as a new handle.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum SpinmtcStatus spinmtc_category_product(const struct SpinmtcCategory *a,
                                            const struct SpinmtcCategory *b,
                                            struct SpinmtcCategory **out);

/**
 * # Safety
 * `c` must be null or a handle from this library, freed once.
 */
void spinmtc_category_free(struct SpinmtcCategory *c);

/**
 * Number of labels.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SpinmtcStatus spinmtc_category_len(const struct SpinmtcCategory *c, size_t *out);

/**
 * The category as a fusion data file.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SpinmtcStatus spinmtc_category_to_json(const struct SpinmtcCategory *c, char **out);

/**
 * Axiom report; `CHECK_FAILED` if any axiom fails.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SpinmtcStatus spinmtc_validate(const struct SpinmtcCategory *c, char **out);

/**
 * Exact s-matrix and the `s² = αC` check.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SpinmtcStatus spinmtc_smatrix(const struct SpinmtcCategory *c, char **out);

/**
 * NS/R classification and block checks. `vminus` may be null when the
 * category has a single candidate.
 *
 * # Safety
 * `c` must be a live handle, `vminus` null or a NUL-terminated string,
 * `out` writable.
 */
enum SpinmtcStatus spinmtc_classify(const struct SpinmtcCategory *c,
                                    const char *vminus,
                                    char **out);

/**
 * Torus dimensions written to `out[0..4]` in the order AA, AP, PA, PP.
 *
 * # Safety
 * `c` must be a live handle, `vminus` null or a NUL-terminated string,
 * `out` must point to four writable `uint64_t`.
 */
enum SpinmtcStatus spinmtc_torus_dims(const struct SpinmtcCategory *c,
                                      const char *vminus,
                                      uint64_t *out);

/**
 * Sphere report for comma-separated boundary labels.
 *
 * # Safety
 * `c` must be a live handle, `vminus` null or a NUL-terminated string,
 * `labels` a NUL-terminated string, `out` writable.
 */
enum SpinmtcStatus spinmtc_sphere(const struct SpinmtcCategory *c,
                                  const char *vminus,
                                  const char *labels,
                                  char **out);

/**
 * Label table of the minimal model SM(p,q).
 *
 * # Safety
 * `out` must be writable.
 */
enum SpinmtcStatus spinmtc_minimal(int64_t p, int64_t q, char **out);

/**
 * Singular vector of SM(p,q) at degree (p−1)(q−1)/2; `CHECK_FAILED` if
 * its leading term does not have the expected shape.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpinmtcStatus spinmtc_singvec(int64_t p, int64_t q, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPINMTC_H */

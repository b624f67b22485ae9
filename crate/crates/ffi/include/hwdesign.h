#ifndef HWDESIGN_H
#define HWDESIGN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum HwCode {
  HW_CODE_OK = 0,
  /**
   * A required pointer argument was null.
   */
  HW_CODE_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  HW_CODE_INVALID_UTF8 = 2,
  /**
   * Parameters out of range or rejected by a builder.
   */
  HW_CODE_REJECTED = 3,
  /**
   * Certificate text does not parse.
   */
  HW_CODE_PARSE = 4,
  /**
   * File could not be read or written.
   */
  HW_CODE_IO = 5,
  /**
   * The design is known not to exist.
   */
  HW_CODE_NONEXISTENT = 6,
  /**
   * Existence is an open problem.
   */
  HW_CODE_OPEN = 7,
  /**
   * A necessary condition fails.
   */
  HW_CODE_NECESSARY_FAIL = 8,
  /**
   * The build needs a design the caller has to supply.
   */
  HW_CODE_MISSING_INGREDIENT = 9,
  /**
   * The search gave up, or no construction is implemented.
   */
  HW_CODE_NOT_FOUND = 10,
  HW_CODE_UNKNOWN_FIXTURE = 11,
  /**
   * A built object failed verification.
   */
  HW_CODE_UNVERIFIED = 12,
  /**
   * `hw_verify` found the certificate INVALID.
   */
  HW_CODE_INVALID = 13,
  /**
   * The library panicked.
   */
  HW_CODE_INTERNAL = 14,
} HwCode;

/**
 * Opaque handle to a verified or parsed certificate.
 */
typedef struct HwCertificate HwCertificate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on the same thread; do not free.
 */
const char *hw_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hw_string_free(char *s);

/**
 * Releases a certificate handle. Null is ignored.
 *
 * # Safety
 * `cert` must come from this library and not have been freed.
 */
void hw_certificate_free(struct HwCertificate *cert);

/**
 * Builds a `k`-ARCS(2kt+1).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HwCode hw_build_arcs(uint32_t k, uint32_t t, struct HwCertificate **out);

/**
 * Builds `HW(v; m, n; alpha, beta)` from the implemented routes.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HwCode hw_build_hw(uint32_t v,
                        uint32_t m,
                        uint32_t n,
                        uint32_t alpha,
                        uint32_t beta,
                        struct HwCertificate **out);

/**
 * Builds one of the stored designs by name, e.g. `"L4.6"`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
enum HwCode hw_build_fixture(const char *name, struct HwCertificate **out);

/**
 * Parses certificate text.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum HwCode hw_certificate_parse(const char *text, struct HwCertificate **out);

/**
 * Reads a certificate file.
 *
 * # Safety
 * `path` must be a nul-terminated string and `out` a valid pointer.
 */
enum HwCode hw_certificate_read(const char *path, struct HwCertificate **out);

/**
 * Writes a certificate file.
 *
 * # Safety
 * `cert` must be a live handle and `path` a nul-terminated string.
 */
enum HwCode hw_certificate_write(const struct HwCertificate *cert, const char *path);

/**
 * Certificate text; free with `hw_string_free`.
 *
 * # Safety
 * `cert` must be a live handle and `out` a valid pointer.
 */
enum HwCode hw_certificate_serialize(const struct HwCertificate *cert, char **out);

/**
 * Number of vertices of the host graph.
 *
 * # Safety
 * `cert` must be a live handle or null (null gives 0).
 */
size_t hw_certificate_order(const struct HwCertificate *cert);

/**
 * Number of classes (factors, almost parallel classes, half classes).
 *
 * # Safety
 * `cert` must be a live handle or null (null gives 0).
 */
size_t hw_certificate_class_count(const struct HwCertificate *cert);

/**
 * Checks the certificate. Returns `HW_CODE_OK` when VALID and
 * `HW_CODE_INVALID` otherwise; when `report` is not null it receives the
 * verifier report (free with `hw_string_free`).
 *
 * # Safety
 * `cert` must be a live handle; `report` null or a valid pointer.
 */
enum HwCode hw_verify(const struct HwCertificate *cert, char **report);

/**
 * Classification line for `HW(v; m, n; alpha, beta)`, e.g.
 * `SOLVABLE(fixture L4.6)`; free with `hw_string_free`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HwCode hw_status(uint64_t v,
                      uint64_t m,
                      uint64_t n,
                      uint64_t alpha,
                      uint64_t beta,
                      char **out);

/**
 * Classification line for a `k`-ARCS(2kt+1).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HwCode hw_arcs_status(uint64_t k, uint64_t t, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HWDESIGN_H */

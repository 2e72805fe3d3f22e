#ifndef HOPF_H
#define HOPF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * The algebra an element lives in.
 */
typedef enum HopfAlgebra {
  HOPF_ALGEBRA_QSYM = 0,
  HOPF_ALGEBRA_NSYM = 1,
  HOPF_ALGEBRA_SYM = 2,
  HOPF_ALGEBRA_WORD = 3,
  HOPF_ALGEBRA_T = 4,
  HOPF_ALGEBRA_HK = 5,
  HOPF_ALGEBRA_HF = 6,
} HopfAlgebra;

/**
 * Status codes returned by every function.
 */
typedef enum HopfStatus {
  HOPF_STATUS_OK = 0,
  HOPF_STATUS_NULL_POINTER = 1,
  HOPF_STATUS_INVALID_UTF8 = 2,
  HOPF_STATUS_PARSE_ERROR = 3,
  HOPF_STATUS_INVALID_ARGUMENT = 4,
  HOPF_STATUS_DIVERGENT_SERIES = 5,
  HOPF_STATUS_ALGEBRA_MISMATCH = 6,
  HOPF_STATUS_OVERFLOW = 7,
  HOPF_STATUS_PANIC = 8,
} HopfStatus;

/**
 * Opaque element handle.
 */
typedef struct HopfElement HopfElement;

/**
 * A truncated multiple zeta value.
 */
typedef struct HopfZeta {
  double value;
  /**
   * `|value(N) - value(N/2)|`.
   */
  double error_estimate;
  uint64_t truncation_n;
  /**
   * Set by `hopf_verify_relation` only.
   */
  bool pass;
} HopfZeta;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `text`, inferring the algebra. On success `*out` owns a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum HopfStatus hopf_element_parse(const char *text, struct HopfElement **out);

/**
 * Parses `text` as an element of `algebra`, which must be a `HopfAlgebra` value.
 *
 * # Safety
 * As `hopf_element_parse`.
 */
enum HopfStatus hopf_element_parse_in(const char *text,
                                      enum HopfAlgebra algebra,
                                      struct HopfElement **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `elem` must come from this library and not be used afterwards.
 */
void hopf_element_free(struct HopfElement *elem);

/**
 * # Safety
 * `elem` must be a live handle; `out` must be writable.
 */
enum HopfStatus hopf_element_algebra(const struct HopfElement *elem, enum HopfAlgebra *out);

/**
 * Prints an element in the parser's syntax. Free the result with `hopf_string_free`.
 *
 * # Safety
 * `elem` must be a live handle; `out` must be writable.
 */
enum HopfStatus hopf_element_to_string(const struct HopfElement *elem, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hopf_string_free(char *s);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum HopfStatus hopf_element_add(const struct HopfElement *a,
                                 const struct HopfElement *b,
                                 struct HopfElement **out);

/**
 * Product in the common algebra of `a` and `b`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum HopfStatus hopf_element_mul(const struct HopfElement *a,
                                 const struct HopfElement *b,
                                 struct HopfElement **out);

/**
 * # Safety
 * `elem` must be a live handle; `out` must be writable.
 */
enum HopfStatus hopf_element_antipode(const struct HopfElement *elem, struct HopfElement **out);

/**
 * The coproduct as text, `x ⊗ y` terms. Free with `hopf_string_free`.
 *
 * # Safety
 * `elem` must be a live handle; `out` must be writable.
 */
enum HopfStatus hopf_element_coproduct(const struct HopfElement *elem, char **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum HopfStatus hopf_element_equal(const struct HopfElement *a,
                                   const struct HopfElement *b,
                                   bool *out);

/**
 * Truncated multiple zeta value of a QSym or word element at `n`.
 *
 * # Safety
 * `elem` must be a live handle; `out` must be writable.
 */
enum HopfStatus hopf_zeta(const struct HopfElement *elem, uint64_t n, struct HopfZeta *out);

/**
 * As `hopf_zeta`, setting `pass` iff `|value| <= max(tol, 3*error_estimate)`.
 *
 * # Safety
 * `elem` must be a live handle; `out` must be writable.
 */
enum HopfStatus hopf_verify_relation(const struct HopfElement *elem,
                                     uint64_t n,
                                     double tol,
                                     struct HopfZeta *out);

/**
 * Tree multiplicity of a tree given in bracket syntax, e.g. `[[][[]]]`.
 *
 * # Safety
 * `tree` must be a NUL-terminated string; `out` must be writable.
 */
enum HopfStatus hopf_tree_multiplicity(const char *tree, uint64_t *out);

/**
 * Message for the most recent failure on this thread, or "" after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *hopf_last_error(void);

/**
 * Library version as a static string.
 */
const char *hopf_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPF_H */

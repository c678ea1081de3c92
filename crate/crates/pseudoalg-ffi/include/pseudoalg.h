#ifndef PSEUDOALG_H
#define PSEUDOALG_H

/* Generated by cbindgen from crates/pseudoalg-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Classification of a pseudoalgebra.
typedef enum PaClassification {
  PA_CLASSIFICATION_LIE = 0,
  PA_CLASSIFICATION_LEIBNIZ_NOT_LIE = 1,
  PA_CLASSIFICATION_NOT_LEIBNIZ = 2,
} PaClassification;

// Sign convention of the λ-bracket output.
typedef enum PaSignConvention {
  // `λ` stands for `s ⊗ 1`.
  PA_SIGN_CONVENTION_CANONICAL = 0,
  // `λ ↦ −λ`: the usual conformal-algebra axioms.
  PA_SIGN_CONVENTION_REVERSE = 1,
} PaSignConvention;

// Result codes.
typedef enum PaStatus {
  PA_STATUS_OK = 0,
  // A required pointer argument was null.
  PA_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  PA_STATUS_INVALID_UTF8 = 2,
  // The algebra text could not be parsed.
  PA_STATUS_PARSE = 3,
  // Unknown family or invalid parameters.
  PA_STATUS_CATALOG = 4,
  // An enumeration argument was out of range.
  PA_STATUS_INVALID_ARGUMENT = 5,
  // A bug in the library; the message says where.
  PA_STATUS_INTERNAL = 6,
} PaStatus;

// Opaque algebra handle.
typedef struct PaAlgebra PaAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *pa_version(void);

// Message describing the last failure on this thread, or null.  The
// pointer stays valid until the next library call on the same thread.
const char *pa_last_error(void);

// Parses an algebra in the `.pa` text format.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum PaStatus pa_algebra_parse(const char *text, struct PaAlgebra **out);

// Builds a member of a catalog family.  `params` holds `name=value`
// assignments separated by `;` or newlines and may be null or empty.
//
// # Safety
// `id` and `params` (if non-null) must be NUL-terminated strings and
// `out` a writable pointer.
enum PaStatus pa_algebra_from_family(const char *id, const char *params, struct PaAlgebra **out);

// Releases a handle.  Null is ignored.
//
// # Safety
// `a` must be null or a handle from this library that is not used again.
void pa_algebra_free(struct PaAlgebra *a);

// Number of generators, or 0 for a null handle.
//
// # Safety
// `a` must be null or a live handle.
size_t pa_algebra_rank(const struct PaAlgebra *a);

// Checks skew-symmetry and the Jacobi identity; writes 1 (holds) or 0.
// Either output pointer may be null to skip that check.
//
// # Safety
// `a` must be a live handle; non-null outputs must be writable.
enum PaStatus pa_algebra_check(const struct PaAlgebra *a, int32_t *skew_ok, int32_t *jacobi_ok);

// Classifies the algebra as Lie, Leibniz but not Lie, or neither.
//
// # Safety
// `a` must be a live handle and `out` writable.
enum PaStatus pa_algebra_classify(const struct PaAlgebra *a, enum PaClassification *out);

// Renders the algebra in the `.pa` text format.
//
// # Safety
// `a` must be a live handle and `out` writable; free the result with
// [`pa_string_free`].
enum PaStatus pa_algebra_print(const struct PaAlgebra *a, char **out);

// Renders the λ-brackets of the algebra.  `convention` is a
// [`PaSignConvention`] value; `ascii` nonzero selects the ASCII spelling
// (`lam`, `d`) instead of `λ`, `∂`.
//
// # Safety
// `a` must be a live handle and `out` writable; free the result with
// [`pa_string_free`].
enum PaStatus pa_algebra_to_lambda(const struct PaAlgebra *a,
                                   int32_t convention,
                                   int32_t ascii,
                                   char **out);

// Releases a string returned by this library.  Null is ignored.
//
// # Safety
// `s` must be null or a string from this library that is not used again.
void pa_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PSEUDOALG_H */

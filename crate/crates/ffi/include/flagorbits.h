#ifndef FLAGORBITS_H
#define FLAGORBITS_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum {
  FO_STATUS_OK = 0,
  FO_STATUS_NULL_POINTER = 1,
  FO_STATUS_INVALID_UTF8 = 2,
  FO_STATUS_INVALID_ARGUMENT = 3,
  FO_STATUS_BUDGET_EXCEEDED = 4,
  FO_STATUS_PANIC = 5,
} FoStatus;

/**
 * A parsed parabolic signature.
 */
typedef struct FoSignature FoSignature;

/**
 * The outcome of a classification.
 */
typedef struct FoVerdict FoVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *fo_last_error(void);

/**
 * Parses a typed signature such as `C:1,inf,1`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
FoStatus fo_signature_parse(const char *text, FoSignature **out);

/**
 * # Safety
 * `sig` must come from [`fo_signature_parse`] and not be freed twice.
 */
void fo_signature_free(FoSignature *sig);

/**
 * Whether the signature has exactly one infinite block.
 *
 * # Safety
 * `sig` must be a live signature and `out` a valid pointer.
 */
FoStatus fo_signature_is_large(const FoSignature *sig, bool *out);

/**
 * Classifies the product of the flag varieties of `sigs`, which must share
 * one type.
 *
 * # Safety
 * `sigs` must point to `len` live signatures and `out` must be valid.
 */
FoStatus fo_classify(const FoSignature *const *sigs, size_t len, FoVerdict **out);

/**
 * # Safety
 * `verdict` must be live and `out` valid.
 */
FoStatus fo_verdict_is_finite(const FoVerdict *verdict, bool *out);

/**
 * The verdict as JSON. Release the string with [`fo_string_free`].
 *
 * # Safety
 * `verdict` must be live and `out` valid.
 */
FoStatus fo_verdict_to_json(const FoVerdict *verdict, char **out);

/**
 * # Safety
 * `verdict` must come from [`fo_classify`] and not be freed twice.
 */
void fo_verdict_free(FoVerdict *verdict);

/**
 * # Safety
 * `s` must be a string returned by this library and not be freed twice.
 */
void fo_string_free(char *s);

/**
 * Number of orbits on a pair of type-A flag varieties with block
 * dimensions `c` and `d`, as a decimal string.
 *
 * # Safety
 * `c` and `d` must point to `c_len` and `d_len` integers, `out` must be valid.
 */
FoStatus fo_count_double(const uint32_t *c,
                         size_t c_len,
                         const uint32_t *d,
                         size_t d_len,
                         char **out);

/**
 * Counts orbits on a product of flag varieties over `GF(p)`.
 *
 * `lie_type` is one of `'A'`, `'B'`, `'C'`, `'D'`. The block dimensions of
 * all factors are concatenated in `dims`; `lens[i]` is the number of blocks
 * of factor `i`.
 *
 * # Safety
 * `dims` must hold the sum of `lens` entries, `lens` must hold `factors`
 * entries, and `orbits` and `points` must be valid.
 */
FoStatus fo_enumerate_orbits(char lie_type,
                             const size_t *dims,
                             const size_t *lens,
                             size_t factors,
                             uint32_t p,
                             uint64_t budget,
                             uint64_t *orbits,
                             uint64_t *points);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLAGORBITS_H */

#ifndef EQUALRANK_H
#define EQUALRANK_H

/* Generated by cbindgen from the equalrank-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every FFI call.
 */
typedef enum ErStatus {
  ER_STATUS_OK = 0,
  ER_STATUS_NULL_POINTER = 1,
  ER_STATUS_INVALID_UTF8 = 2,
  ER_STATUS_INVALID_ARGUMENT = 3,
  ER_STATUS_NOT_FOUND = 4,
  ER_STATUS_SINGULAR = 5,
  ER_STATUS_RESOURCE_CAP = 6,
  ER_STATUS_VERIFICATION_FAILED = 7,
  ER_STATUS_INTERNAL = 8,
} ErStatus;

/**
 * An opaque equal-rank pair plus its lazily computed coset section.
 */
typedef struct ErPair ErPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string (do not free).
 */
const char *er_version(void);

/**
 * A copy of the last error message on this thread, or NULL if none.
 * Release with `er_string_free`.
 */
char *er_last_error(void);

/**
 * Releases a string returned by this library. NULL is accepted.
 */
void er_string_free(char *s);

/**
 * Resolves a pair from the built-in registry (or a registry file when
 * `registry_path` is non-NULL). `rank` is used by parameterized names such
 * as `Bn-Dn`; pass 0 when not needed.
 *
 * # Safety
 * `name` (and `registry_path` when non-NULL) must be NUL-terminated
 * strings; `out` must be a valid pointer.
 */
enum ErStatus er_pair_new(const char *name,
                          size_t rank,
                          const char *registry_path,
                          struct ErPair **out);

/**
 * Releases a pair handle. NULL is accepted.
 */
void er_pair_free(struct ErPair *pair);

/**
 * The index m = |W(F)| / |W(B)| (also the multiplet size).
 *
 * # Safety
 * `pair` must be a live handle from `er_pair_new`; `out` must be valid.
 */
enum ErStatus er_pair_index(struct ErPair *pair, uint64_t *out);

/**
 * The coset section as JSON `{pair, count, section:[{word, sign, image}]}`.
 *
 * # Safety
 * `pair` must be a live handle; `out` must be valid.
 */
enum ErStatus er_cosets_json(struct ErPair *pair, char **out);

/**
 * The multiplet at λ (comma-separated fundamental-weight coefficients of
 * F) as JSON `{lambda, members:[{sign, weight, dim, casimir}],
 * signed_dimension_sum}`.
 *
 * # Safety
 * `pair` must be a live handle; `lambda_csv` a NUL-terminated string;
 * `out` valid.
 */
enum ErStatus er_multiplet_json(struct ErPair *pair, const char *lambda_csv, char **out);

/**
 * Verifies the five character identities at λ. Returns `Ok` when all pass,
 * `VerificationFailed` when a check fails (the JSON report is still
 * written), and `ResourceCap` when a check had to be skipped.
 *
 * # Safety
 * Same contract as `er_multiplet_json`.
 */
enum ErStatus er_verify_json(struct ErPair *pair, const char *lambda_csv, char **out);

/**
 * Branches V_λ to B as JSON `{lambda, entries:[{highest_weight,
 * multiplicity, dim}], total_dimension}`.
 *
 * # Safety
 * Same contract as `er_multiplet_json`.
 */
enum ErStatus er_branch_json(struct ErPair *pair, const char *lambda_csv, char **out);

/**
 * The exact irreducible character of one side of the pair. `rep` is `'F'`
 * or `'B'`; `mu_csv` gives fundamental-weight coefficients of that side
 * (empty for a torus). JSON `{rep, mu, dimension, terms:[{weight, coeff}]}`
 * with terms in canonical sorted order.
 *
 * # Safety
 * Same contract as `er_multiplet_json`.
 */
enum ErStatus er_character_json(struct ErPair *pair, char rep, const char *mu_csv, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQUALRANK_H */

#ifndef INVHOL_H
#define INVHOL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum InvholStatus {
  INVHOL_STATUS_OK = 0,
  INVHOL_STATUS_NULL_POINTER = 1,
  INVHOL_STATUS_INVALID_ARGUMENT = 2,
  INVHOL_STATUS_PARSE_ERROR = 3,
  INVHOL_STATUS_NOT_ASSOCIATIVE = 4,
  INVHOL_STATUS_NOT_INVERSE = 5,
  INVHOL_STATUS_SIZE_CAP = 6,
  INVHOL_STATUS_BUDGET_EXCEEDED = 7,
  INVHOL_STATUS_INTERNAL = 8,
} InvholStatus;

// A validated finite inverse semigroup.
typedef struct InvholSemigroup InvholSemigroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Owned by the
// library; valid until the next failing call.
const char *invhol_last_error(void);

// Library version as a static string.
const char *invhol_version(void);

// Builds a semigroup from a row-major `n * n` table. Elements are named
// by their index.
//
// # Safety
// `table` must point to `n * n` readable values and `out` must be writable.
enum InvholStatus invhol_semigroup_from_table(size_t n,
                                              const size_t *table,
                                              struct InvholSemigroup **out);

// Builds one of the named examples (`z3`, `s3`, `i2`, ...).
//
// # Safety
// `name` must be a NUL-terminated string and `out` must be writable.
enum InvholStatus invhol_semigroup_from_name(const char *name, struct InvholSemigroup **out);

// Builds a semigroup from the JSON file format used by the command line.
//
// # Safety
// `json` must be a NUL-terminated string and `out` must be writable.
enum InvholStatus invhol_semigroup_from_json(const char *json, struct InvholSemigroup **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `s` must come from a constructor in this library and not be used again.
void invhol_semigroup_free(struct InvholSemigroup *s);

// Number of elements, or 0 for a null handle.
//
// # Safety
// `s` must be null or a live handle.
size_t invhol_semigroup_size(const struct InvholSemigroup *s);

// Product `a * b`.
//
// # Safety
// `s` must be a live handle and `out` writable.
enum InvholStatus invhol_semigroup_mul(const struct InvholSemigroup *s,
                                       size_t a,
                                       size_t b,
                                       size_t *out);

// Semigroup as JSON text; release with [`invhol_string_free`].
//
// # Safety
// `s` must be a live handle and `out` writable.
enum InvholStatus invhol_semigroup_to_json(const struct InvholSemigroup *s, char **out);

// Counts premorphisms of `s`. A `budget` of 0 selects the default.
//
// # Safety
// `s` must be a live handle and `out` writable.
enum InvholStatus invhol_count_premorphisms(const struct InvholSemigroup *s,
                                            uint64_t budget_nodes,
                                            size_t *out);

// Counts elements of Hol(S) and its group of units.
//
// # Safety
// `s` must be a live handle; `elements` and `unit_count` writable.
enum InvholStatus invhol_count_holomorph(const struct InvholSemigroup *s,
                                         uint64_t budget_nodes,
                                         size_t *elements,
                                         size_t *unit_count);

// Counts heap-preserving maps of `s`.
//
// # Safety
// `s` must be a live handle and `out` writable.
enum InvholStatus invhol_count_sha(const struct InvholSemigroup *s,
                                   uint64_t budget_nodes,
                                   size_t *out);

// Evaluates a polycyclic expression over `alphabet` letters to its normal
// form, e.g. `"(ab)^-1 a * b^-1"`. Release the result with
// [`invhol_string_free`].
//
// # Safety
// `expr` must be a NUL-terminated string and `out` writable.
enum InvholStatus invhol_poly_eval(size_t alphabet, const char *expr, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used again.
void invhol_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INVHOL_H */

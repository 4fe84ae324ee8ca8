/* C interface of the tpnf library. Generated by cbindgen; do not edit. */

#ifndef TPNF_H
#define TPNF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this interface.
 */
typedef enum TpnfStatus {
  /**
   * The call succeeded.
   */
  TPNF_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TPNF_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  TPNF_STATUS_INVALID_UTF8 = 2,
  /**
   * The input was rejected (bad dimension, index, rational literal, ...).
   */
  TPNF_STATUS_INVALID_INPUT = 3,
  /**
   * A bracket was not a member of the parameterized family.
   */
  TPNF_STATUS_NOT_IN_FAMILY = 4,
  /**
   * An internal invariant failed; please report.
   */
  TPNF_STATUS_INTERNAL = 5,
} TpnfStatus;

/**
 * Identity set to require in [`tpnf_algebra_verify`].
 */
typedef enum TpnfExpect {
  /**
   * Report the checks without requiring any of them.
   */
  TPNF_EXPECT_NONE = 0,
  /**
   * Require the Poisson axioms (Leibniz compatibility).
   */
  TPNF_EXPECT_POISSON = 1,
  /**
   * Require the transposed Poisson axioms.
   */
  TPNF_EXPECT_TRANSPOSED = 2,
} TpnfExpect;

/**
 * Compatibility identity for [`tpnf_solve`].
 */
typedef enum TpnfSolveMode {
  TPNF_SOLVE_MODE_TRANSPOSED = 0,
  TPNF_SOLVE_MODE_POISSON = 1,
} TpnfSolveMode;

/**
 * Opaque algebra handle: a product tensor plus an optional bracket.
 */
typedef struct TpnfAlgebra TpnfAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *tpnf_last_error_message(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must have been returned by a `tpnf_*` function and not freed yet.
 */
void tpnf_string_free(char *s);

/**
 * Release an algebra handle. Null is ignored.
 *
 * # Safety
 * `alg` must have been returned by this library and not freed yet.
 */
void tpnf_algebra_free(struct TpnfAlgebra *alg);

/**
 * Construct the null-filiform product algebra of dimension `dim`
 * (1..=64), without a bracket.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TpnfStatus tpnf_algebra_mu0(size_t dim, struct TpnfAlgebra **out);

/**
 * Construct the algebra together with the family bracket for the
 * comma-separated parameters `alpha_2..alpha_n` (e.g. `"1,0,-2/3"`).
 *
 * # Safety
 * `alpha_csv` must be a valid nul-terminated string and `out` a valid
 * pointer.
 */
enum TpnfStatus tpnf_algebra_tp(size_t dim, const char *alpha_csv, struct TpnfAlgebra **out);

/**
 * Parse an algebra document (the CLI's JSON schema) into a handle.
 *
 * # Safety
 * `json` must be a valid nul-terminated string and `out` a valid pointer.
 */
enum TpnfStatus tpnf_algebra_from_json(const char *json, struct TpnfAlgebra **out);

/**
 * Serialize a handle back to its JSON document.
 *
 * # Safety
 * `alg` must be a live handle and `out_json` a valid pointer.
 */
enum TpnfStatus tpnf_algebra_to_json(const struct TpnfAlgebra *alg, char **out_json);

/**
 * Dimension of the underlying space; 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t tpnf_algebra_dim(const struct TpnfAlgebra *alg);

/**
 * Run the identity checks on a handle (a missing bracket counts as the
 * zero bracket). `out_holds` receives whether the expectation holds;
 * `out_json` (optional, may be null) receives the full checks report.
 *
 * # Safety
 * `alg` must be a live handle; `out_holds` must be valid; `out_json`
 * must be null or valid.
 */
enum TpnfStatus tpnf_algebra_verify(const struct TpnfAlgebra *alg,
                                    enum TpnfExpect expect,
                                    bool *out_holds,
                                    char **out_json);

/**
 * Solve for all compatible antisymmetric brackets in dimension `dim`
 * (2..=10). The result JSON matches the CLI's `solve` output.
 *
 * # Safety
 * `out_json` must be a valid pointer.
 */
enum TpnfStatus tpnf_solve(size_t dim, enum TpnfSolveMode mode, char **out_json);

/**
 * Canonical form and reduction transcript for the comma-separated family
 * parameters. The result JSON matches the CLI's `classify` output.
 *
 * # Safety
 * `alpha_csv` must be a valid nul-terminated string and `out_json` a
 * valid pointer.
 */
enum TpnfStatus tpnf_classify(size_t dim, const char *alpha_csv, char **out_json);

/**
 * Decide isomorphism of two parameter vectors. `out_isomorphic` receives
 * the verdict; `out_json` (optional, may be null) receives the full
 * result including a rational witness when one exists.
 *
 * # Safety
 * The string arguments must be valid nul-terminated strings;
 * `out_isomorphic` must be valid; `out_json` must be null or valid.
 */
enum TpnfStatus tpnf_isomorphic(size_t dim,
                                const char *alpha_a_csv,
                                const char *alpha_b_csv,
                                bool *out_isomorphic,
                                char **out_json);

/**
 * The classification family table for dimension `dim` (2..=64), as the
 * CLI's `table` JSON.
 *
 * # Safety
 * `out_json` must be a valid pointer.
 */
enum TpnfStatus tpnf_table(size_t dim, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TPNF_H */

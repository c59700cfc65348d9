/* C ABI for the isobar computer-algebra library.
 * Generated from src/lib.rs with cbindgen (see cbindgen.toml); keep in
 * sync when the exported surface changes. tests/c_smoke.rs compiles a C
 * program against this header on every test run.
 *
 * Conventions:
 *  - constructors return NULL on failure; isobar_last_error() describes
 *    the most recent failure on the calling thread;
 *  - functions with output parameters return an IsobarStatus;
 *  - strings returned by the library are owned by the caller and must be
 *    released with isobar_string_free(), polynomial handles with
 *    isobar_poly_free().
 */

#ifndef ISOBAR_H
#define ISOBAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a fallible call.
 */
typedef enum IsobarStatus {
  IsobarOk = 0,
  IsobarNullArgument = 1,
  IsobarInvalidArgument = 2,
  IsobarComputationError = 3,
  IsobarNotWeighted = 4,
} IsobarStatus;

/**
 * Opaque handle to an exact isobaric polynomial.
 */
typedef struct IsobarPoly IsobarPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or NULL.
 * The pointer is valid until the next library call on the same thread.
 */
const char *isobar_last_error(void);

/**
 * Releases a string returned by this library.
 */
void isobar_string_free(char *s);

/**
 * Releases a polynomial handle.
 */
void isobar_poly_free(IsobarPoly *p);

/**
 * P_{k,n,omega} for a weight spec (`ones`, `naturals`, `hook:r`, or a
 * comma list of fractions). NULL on error.
 */
IsobarPoly *isobar_wip(uint32_t n, uint32_t k, const char *weights);

/**
 * The Schur reflect of a partition such as "3,2"; `basis` is 'e' or 'h'.
 * NULL on error.
 */
IsobarPoly *isobar_schur(const char *lambda, char basis);

/**
 * The hook reflect of shape (n-r, 1^r). NULL on error.
 */
IsobarPoly *isobar_hook(uint32_t n, uint32_t r);

/**
 * The level-n slice of the q-th level root H_{k,n,omega}; `q` is an exact
 * fraction string. NULL on error.
 */
IsobarPoly *isobar_root(uint32_t n, uint32_t k, const char *weights, const char *q);

/**
 * Sum of two polynomials of one level. NULL on a grading mismatch.
 */
IsobarPoly *isobar_poly_add(const IsobarPoly *a, const IsobarPoly *b);

/**
 * Product of two polynomials.
 */
IsobarPoly *isobar_poly_mul(const IsobarPoly *a, const IsobarPoly *b);

/**
 * Drops every term involving t_j with j > k.
 */
IsobarPoly *isobar_poly_truncate(const IsobarPoly *p, uint32_t k);

/**
 * Parses the JSON polynomial form. NULL on error.
 */
IsobarPoly *isobar_poly_from_json(const char *json);

/**
 * The level of the polynomial; -1 on a null handle.
 */
int64_t isobar_poly_level(const IsobarPoly *p);

/**
 * The number of stored monomials; -1 on a null handle.
 */
int64_t isobar_poly_term_count(const IsobarPoly *p);

/**
 * Text rendering, monomials ascending: `t1^4 + 3t1^2*t2 + ...`.
 * Free with isobar_string_free.
 */
char *isobar_poly_text(const IsobarPoly *p);

/**
 * JSON rendering: {"level":n,"terms":[{"alpha":[...],"coeff":"..."}]}.
 * Free with isobar_string_free.
 */
char *isobar_poly_json(const IsobarPoly *p);

/**
 * Evaluates at the comma-separated rational point `point` (value of t_1
 * first). On success writes a fraction string to `*out`.
 */
IsobarStatus isobar_poly_evaluate(const IsobarPoly *p, const char *point, char **out);

/**
 * Recovers the weight vector of a weighted polynomial as a comma list in
 * `*out`, or returns IsobarNotWeighted.
 */
IsobarStatus isobar_poly_weight(const IsobarPoly *p, char **out);

/**
 * Local values chi^{*q}(p^0..p^n) of the core function with the given
 * comma-separated coefficients, as a JSON array of fraction strings.
 * Free with isobar_string_free; NULL on error.
 */
char *isobar_arith_local(const char *coeffs, const char *q, uint32_t n);

/**
 * chi^{*q}(m) over the factorization of m; writes a fraction string.
 */
IsobarStatus isobar_arith_global(const char *coeffs, const char *q, uint64_t m, char **out);

/**
 * The character table of Sym(n) as JSON with partition row/column labels.
 * Free with isobar_string_free; NULL on error (n = 0 or beyond the bound).
 */
char *isobar_chartable_json(uint32_t n);

#ifdef __cplusplus
}  // extern "C"
#endif // __cplusplus

#endif  /* ISOBAR_H */

/* Minimal round trip through the C ABI: build a polynomial, render it,
 * evaluate it, detect its weight, and exercise the error path.
 *
 * Build (after `cargo build -p isobar-capi`):
 *   cc examples/smoke.c -Iinclude -L../../target/debug \
 *      -lisobar_capi -lpthread -ldl -lm -o smoke
 */

#include <stdio.h>
#include <string.h>

#include "isobar.h"

static int failures = 0;

static void expect(int ok, const char *what) {
  if (!ok) {
    fprintf(stderr, "FAIL: %s\n", what);
    failures++;
  }
}

int main(void) {
  /* F_4 = t1^4 + 3t1^2*t2 + t2^2 + 2t1*t3 + t4 */
  IsobarPoly *f4 = isobar_wip(4, 4, "ones");
  expect(f4 != NULL, "isobar_wip returns a handle");
  expect(isobar_poly_level(f4) == 4, "level is 4");
  expect(isobar_poly_term_count(f4) == 5, "5 monomials");

  char *text = isobar_poly_text(f4);
  expect(text != NULL && strcmp(text, "t1^4 + 3t1^2*t2 + t2^2 + 2t1*t3 + t4") == 0,
         "text rendering");
  printf("F_4 = %s\n", text ? text : "(null)");
  isobar_string_free(text);

  char *value = NULL;
  expect(isobar_poly_evaluate(f4, "1,1,1,1", &value) == IsobarOk, "evaluate status");
  expect(value != NULL && strcmp(value, "8") == 0, "F_4(1,1,1,1) = 8");
  isobar_string_free(value);

  char *weights = NULL;
  expect(isobar_poly_weight(f4, &weights) == IsobarOk, "F_4 is weighted");
  expect(weights != NULL && strcmp(weights, "1,1,1,1") == 0, "weights are ones");
  isobar_string_free(weights);

  /* the (2,2) reflect is not weighted */
  IsobarPoly *s22 = isobar_schur("2,2", 'e');
  expect(s22 != NULL, "isobar_schur returns a handle");
  char *none = NULL;
  expect(isobar_poly_weight(s22, &none) == IsobarNotWeighted, "(2,2) has no weight");

  /* JSON round trip */
  char *json = isobar_poly_json(s22);
  IsobarPoly *back = isobar_poly_from_json(json);
  char *a = isobar_poly_text(s22);
  char *b = isobar_poly_text(back);
  expect(a && b && strcmp(a, b) == 0, "JSON round trip");
  isobar_string_free(a);
  isobar_string_free(b);
  isobar_string_free(json);

  /* arithmetic functions: the Fibonacci core spec at m = 12 */
  char *global = NULL;
  expect(isobar_arith_global("1,1", "1", 12, &global) == IsobarOk, "global status");
  expect(global != NULL && strcmp(global, "2") == 0, "chi(12) = 2");
  isobar_string_free(global);

  char *local = isobar_arith_local("1,1", "1/2", 2);
  expect(local != NULL && strcmp(local, "[\"1\",\"1/2\",\"7/8\"]") == 0, "local values");
  isobar_string_free(local);

  /* error path: invalid hook */
  IsobarPoly *bad = isobar_hook(3, 7);
  expect(bad == NULL, "invalid hook returns NULL");
  expect(isobar_last_error() != NULL, "error message is set");

  isobar_poly_free(back);
  isobar_poly_free(s22);
  isobar_poly_free(f4);

  if (failures == 0) {
    printf("smoke: all checks passed\n");
  }
  return failures == 0 ? 0 : 1;
}

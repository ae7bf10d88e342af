/* C interface to the Hilbert-series invariant library.
 *
 * All functions return a hilb_status; out-parameters are written only on
 * HILB_OK. Strings returned through char** are heap-allocated and must be
 * released with hilb_string_free. hilb_last_error() describes the most
 * recent failure on the calling thread.
 */
#ifndef HILB_H
#define HILB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hilb_status {
  HILB_OK = 0,
  HILB_ERR_SYNTAX = 1,
  HILB_ERR_NOT_NONNEGATIVE = 2,
  HILB_ERR_NO_PRESENTATION = 3,
  HILB_ERR_INVALID_MOVE = 4,
  HILB_ERR_BUDGET_EXCEEDED = 5,
  HILB_ERR_PRECONDITION = 6,
  HILB_ERR_BAD_ARGUMENT = 7,
  HILB_ERR_IO = 8
} hilb_status;

typedef struct hilb_series hilb_series;
typedef struct hilb_presentation hilb_presentation;
typedef struct hilb_representation hilb_representation;

/* Message for the last error on this thread; empty string if none. */
const char* hilb_last_error(void);
void hilb_string_free(char* s);

/* --- series ------------------------------------------------------- */

/* Parse numerator text ("2-5t+t^2+4t^3" or "[2,-5,1,4]") over (1-t)^dim.
 * The series is stored canonicalized. */
hilb_status hilb_series_parse(const char* numerator, unsigned dim,
                              hilb_series** out);

/* Hilbert series of K[x1..xn]/I for a monomial ideal, e.g.
 * "x1^2, x1*x2, x2^2" with nvars = 2. */
hilb_status hilb_series_from_ideal(const char* ideal, unsigned nvars,
                                   hilb_series** out);

void hilb_series_free(hilb_series* s);

/* Canonicalized numerator text and dimension. */
hilb_status hilb_series_numerator(const hilb_series* s, char** out);
hilb_status hilb_series_dim(const hilb_series* s, unsigned* out);

/* 1 if every power-series coefficient is nonnegative, else 0. */
hilb_status hilb_series_is_nonnegative(const hilb_series* s, int* out);

/* Invariant report as JSON:
 * {"dim","numerator","hdepth","hprojdim","hreg","delta_d_tilde",
 *  "deg_series","width_k"}. Fails with HILB_ERR_NOT_NONNEGATIVE on a
 * series with negative coefficients. */
hilb_status hilb_series_report_json(const hilb_series* s, char** out);

/* Default search budget for this series: max(deg Q, delta_d(Qt)) + 8. */
hilb_status hilb_series_default_budget(const hilb_series* s, unsigned* out);

/* Brute-force reference values, as JSON
 * {"brute_hreg":int,"brute_hdepth":int}; slow, for debugging. */
hilb_status hilb_series_oracle_json(const hilb_series* s, unsigned budget,
                                    char** out);

/* --- boundary presentations --------------------------------------- */

/* The unique (n,k)-boundary presentation. */
hilb_status hilb_presentation_compute(const hilb_series* s, unsigned n,
                                      unsigned k, hilb_presentation** out);

/* Nonnegative presentation of minimal width (0, Hreg). */
hilb_status hilb_presentation_min_width(const hilb_series* s,
                                        hilb_presentation** out);

/* Nonnegative corner-free presentation of minimal height (Hdepth, e). */
hilb_status hilb_presentation_min_height(const hilb_series* s,
                                         hilb_presentation** out);

void hilb_presentation_free(hilb_presentation* p);

/* JSON {"d","n","k","f","c","g"}; parse accepts the same shape. */
hilb_status hilb_presentation_json(const hilb_presentation* p, char** out);
hilb_status hilb_presentation_parse_json(const char* text,
                                         hilb_presentation** out);

/* ASCII grid with rows labeled d..0 and columns 0..k. */
hilb_status hilb_presentation_grid(const hilb_presentation* p, char** out);

/* match = 1 iff the presentation sums back to the series exactly. */
hilb_status hilb_presentation_verify(const hilb_presentation* p,
                                     const hilb_series* s, int* match);

/* --- positive representations ------------------------------------- */

/* Flatten a nonnegative presentation into positive terms a*t^j/(1-t)^i. */
hilb_status hilb_representation_from_presentation(const hilb_presentation* p,
                                                  hilb_representation** out);

void hilb_representation_free(hilb_representation* r);

/* JSON {"terms":[{"i","j","a"},...]} sorted by (i desc, j asc). */
hilb_status hilb_representation_json(const hilb_representation* r, char** out);
hilb_status hilb_representation_parse_json(const char* text,
                                           hilb_representation** out);

/* match = 1 iff the terms sum to the series exactly. */
hilb_status hilb_representation_verify(const hilb_representation* r,
                                       const hilb_series* s, int* match);

/* --- batch files ---------------------------------------------------- */

/* Process a JSON-lines file ({"numerator":...,"dim":...} per line) and
 * return one JSON line per input line: {"line":N,"numerator":...,"dim":N}
 * for valid entries (merged with the invariant report when
 * run_invariants != 0), or {"line":N,"error":"..."} for bad lines. Bad
 * lines never abort the batch. */
hilb_status hilb_batch_json(const char* path, int run_invariants, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HILB_H */

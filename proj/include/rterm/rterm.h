/* rterm - curvature-term spectroscopy toolkit, public C API.
 *
 * All functions are thread-safe. Quantum numbers are passed as twice their
 * value (two_j = 2j) so half-integer spins are exact. Strings returned
 * through `char **out` are heap-allocated; release them with
 * rterm_string_free(). On failure the out-pointer is left untouched and
 * rterm_last_error() carries a diagnostic for the calling thread.
 */
#ifndef RTERM_H
#define RTERM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rterm_status {
  RTERM_OK = 0,
  RTERM_ERR_INTERNAL = 1,
  RTERM_ERR_ROUTE_DISAGREEMENT = 2, /* the two exact f-element routes differ */
  RTERM_ERR_DEGENERATE_METRIC = 3,
  RTERM_ERR_STEP_TOO_LARGE = 4,
  RTERM_ERR_DEGENERATE_GRID = 5,
  RTERM_ERR_PARSE = 6,
  RTERM_ERR_INSUFFICIENT_LEVELS = 7,
  RTERM_ERR_SINGULAR_DESIGN = 8,
  RTERM_ERR_INVALID_ARGUMENT = 9,
  RTERM_ERR_IRRATIONAL_RESULT = 10
} rterm_status;

typedef enum rterm_format {
  RTERM_FORMAT_JSON = 0,
  RTERM_FORMAT_CSV = 1,
  RTERM_FORMAT_TEXT = 2
} rterm_format;

/* Source of the (R0, kappa) coefficients used for level shifts:
 * RTERM_KAPPA_FIT measures them from the curvature engine,
 * RTERM_KAPPA_FORMULA uses the published closed-form expression verbatim. */
typedef enum rterm_kappa_source {
  RTERM_KAPPA_FIT = 0,
  RTERM_KAPPA_FORMULA = 1
} rterm_kappa_source;

typedef struct rterm_config {
  double step_h;          /* finite-difference step in radians, default 1e-3 */
  double det_tol;         /* metric degeneracy tolerance, default 1e-12 */
  double lande_threshold; /* interval-spread flag level, default 0.05 */
  double confidence;      /* two-sided confidence level, default 0.95 */
} rterm_config;

/* Fill cfg with the documented defaults. */
void rterm_config_init(rterm_config *cfg);

/* Merge key=value lines from a config file into cfg. Recognized keys:
 * step_h, det_tol, lande_threshold, confidence, output_format. When the
 * file names an output_format and fmt_out is non-NULL it is stored there;
 * otherwise fmt_out is left untouched. */
rterm_status rterm_config_load(const char *path, rterm_config *cfg,
                               rterm_format *fmt_out);

const char *rterm_version(void);
const char *rterm_status_name(rterm_status s);

/* Message for the last failing call on this thread ("" if none). */
const char *rterm_last_error(void);

void rterm_string_free(char *s);

/* ----- exact angular-momentum kernel ------------------------------------ */
/* Values are exact and rendered canonically: "0", a fraction like "-4/5"
 * when the result is rational, or "sqrt(2/15)" / "-sqrt(2/15)" otherwise. */

rterm_status rterm_clebsch_gordan(int two_j1, int two_m1, int two_j2,
                                  int two_m2, int two_j, int two_m,
                                  char **out);
rterm_status rterm_wigner_3j(int two_j1, int two_j2, int two_j3, int two_m1,
                             int two_m2, int two_m3, char **out);
rterm_status rterm_wigner_6j(int two_j1, int two_j2, int two_j3, int two_j4,
                             int two_j5, int two_j6, char **out);

/* Exact diagonal element of the rank-2 coupling function for the level
 * (L, S, J); always a plain fraction such as "8/5". */
rterm_status rterm_f_element(int two_l, int two_s, int two_j, char **out);

/* ----- report builders (the CLI subcommand backends) --------------------- */

rterm_status rterm_report_table1(const rterm_config *cfg, rterm_format format,
                                 char **out);

rterm_status rterm_report_fmat(const rterm_config *cfg, int two_l, int two_s,
                               int two_j, rterm_format format, char **out);

/* kind: "cg", "3j" or "6j"; two_args holds the six doubled arguments. */
rterm_status rterm_report_wigner(const rterm_config *cfg, const char *kind,
                                 const int two_args[6], rterm_format format,
                                 char **out);

/* point = {theta, phi, theta_prime, phi_prime}. include_tensors adds the
 * Christoffel and Ricci components to the report. flat_space swaps in an
 * identity metric (engine sanity check). */
rterm_status rterm_report_curvature(const rterm_config *cfg, double i_l,
                                    double i_s, double inv_i_ls,
                                    const double point[4], int include_tensors,
                                    int flat_space, rterm_format format,
                                    char **out);

rterm_status rterm_report_expand(const rterm_config *cfg, double i_l,
                                 double i_s, const double *inv_i_ls,
                                 size_t n_inv, const double *beta,
                                 size_t n_beta, rterm_format format,
                                 char **out);

/* Per-J energies, intervals and deviations for one multiplet. e0 is a
 * uniform energy offset, hbar_sq the unit scale. With RTERM_FORMAT_CSV the
 * output is a levels file suitable for rterm_levels_parse(). */
rterm_status rterm_report_predict(const rterm_config *cfg, double i_l,
                                  double i_s, double inv_i_ls, double c,
                                  int two_l, int two_s,
                                  rterm_kappa_source kappa_source, double e0,
                                  double hbar_sq, const char *label,
                                  rterm_format format, char **out);

/* ----- experimental level data and bound fits ---------------------------- */

typedef struct rterm_levels rterm_levels; /* opaque */

rterm_status rterm_levels_parse(const char *csv_text, rterm_levels **out);
rterm_status rterm_levels_load(const char *path, rterm_levels **out);
void rterm_levels_free(rterm_levels *levels);
size_t rterm_levels_multiplet_count(const rterm_levels *levels);

/* Weighted least-squares fit of every multiplet (or the one whose label is
 * select_label) with confidence intervals for the curvature coefficient. */
rterm_status rterm_report_fit(const rterm_config *cfg,
                              const rterm_levels *levels,
                              const char *select_label, rterm_format format,
                              char **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RTERM_H */

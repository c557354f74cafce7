#ifndef FRACLAB_H
#define FRACLAB_H

/* C interface to the fraclab library: scalar spectral/Levy evaluators, an
 * opaque Levy-exponent handle, the acceptance criteria, and the high-level
 * subcommand runner used by the command-line tool. All functions return a
 * status code; on failure the thread-local message from flb_last_error()
 * describes the problem. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FLB_OK = 0,
  FLB_ERR_CONFIG = 2,    /* invalid parameter or configuration */
  FLB_ERR_TOLERANCE = 3, /* a declared numerical tolerance was not met */
  FLB_ERR_BUDGET = 4,    /* simulation exceeded its jump budget */
  FLB_ERR_DOMAIN = 5,    /* quantity undefined or divergent at the input */
  FLB_ERR_NUMERIC = 6,   /* quadrature or root solve failed to converge */
  FLB_ERR_INTERNAL = 7
} flb_status;

const char* flb_version(void);
/* Thread-local message describing the most recent failure. */
const char* flb_last_error(void);

/* --- scalar spectral layer (branch is 1 or 2) ------------------------- */
flb_status flb_omega(double B, double gamma, double k, int branch,
                     double* out);
flb_status flb_theta_sq(double B, double gamma, double k, int branch,
                        double* out);
flb_status flb_group_velocity(double B, double gamma, double k, double* out);
flb_status flb_lambda(double B, double gamma, double k, int branch,
                      double* out);
flb_status flb_psi(double B, double gamma, double k, int branch, double* out);
flb_status flb_pi_density(double B, double gamma, double k, int branch,
                          double* out);

/* --- Levy calculus ---------------------------------------------------- */
/* branch_plus: nonzero for the plus branch. Writes the root and d/dr. */
flb_status flb_solve_x(int branch_plus, double B, double gamma, double r,
                       double* x, double* xprime);
flb_status flb_density_g(int branch_plus, double B, double gamma, double r,
                         double* out);
/* Limiting value of N^alpha pi(Psi > N r) for the given scaling exponent. */
flb_status flb_scaled_tail_theory(double B, double gamma, double delta,
                                  double r, double* out);

/* Levy exponent handle; regime is selected by delta (<1/2, =1/2, >1/2). */
typedef struct flb_exponent flb_exponent;
flb_status flb_exponent_create(double delta, double B, double gamma,
                               flb_exponent** out);
void flb_exponent_destroy(flb_exponent* e);
flb_status flb_exponent_phi(const flb_exponent* e, double theta, double* out);

/* --- acceptance and orchestration ------------------------------------- */
/* Runs acceptance criterion id (1..10); *pass gets 0/1; detail_buf (may be
 * NULL) receives a human-readable summary. A completed run returns FLB_OK
 * whether or not the criterion passed. */
flb_status flb_run_criterion(int id, unsigned long long seed, int* pass,
                             char* detail_buf, size_t detail_len);

/* Executes one subcommand (spectral-table | tails | levy-exponent |
 * pde-limit | mc-charfn | mc-clock | mc-hydro | verify-all) with the given
 * flat key/value config text, writing outputs and a manifest to out_dir.
 * msg_buf (may be NULL) receives the run summary. The status mirrors the
 * tool exit code: FLB_OK, FLB_ERR_CONFIG, FLB_ERR_TOLERANCE, FLB_ERR_BUDGET. */
flb_status flb_run(const char* subcommand, const char* config_text,
                   const char* out_dir, unsigned long long seed, char* msg_buf,
                   size_t msg_len);

#ifdef __cplusplus
}
#endif

#endif /* FRACLAB_H */

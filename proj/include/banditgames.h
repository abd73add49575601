#ifndef BANDITGAMES_H
#define BANDITGAMES_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns bg_status. On failure, bg_last_error() holds a
 * thread-local message describing what went wrong. Out parameters are only
 * written on BG_OK. Handles are freed with their matching *_free function;
 * strings returned through char** are freed with bg_string_free. */

typedef enum bg_status {
  BG_OK = 0,
  BG_ERR_INVALID_ARGUMENT = 1,
  BG_ERR_DIMENSION = 2,
  BG_ERR_DOMAIN = 3,
  BG_ERR_NO_CONVERGENCE = 4,
  BG_ERR_PARSE = 5,
  BG_ERR_IO = 6,
  BG_ERR_MISSING_DIAGNOSTIC = 7,
  BG_ERR_UNKNOWN_SUITE = 8,
  BG_ERR_PROTOCOL = 9,
  BG_ERR_INTERNAL = 10
} bg_status;

const char* bg_status_name(bg_status status);
const char* bg_last_error(void);
const char* bg_version(void);
void bg_string_free(char* text);

uint64_t bg_derive_seed(uint64_t master_seed, uint64_t index);

/* ------------------------------------------------------------------ games */

typedef struct bg_game bg_game;

/* entries are row major, each in [0, 1]; bernoulli != 0 samples losses as
 * coin flips with those means, otherwise the mean itself is the loss */
bg_status bg_game_create(int32_t rows, int32_t cols, const double* entries,
                         int32_t bernoulli, bg_game** out);

/* the two-action family with means {{2/3 - eps, 1/3 + eps}, {1/3, 2/3}} */
bg_status bg_game_hard_instance(double epsilon, bg_game** out);

bg_status bg_game_parse(const char* text, bg_game** out);

/* path to a game file, or "hard:<eps>" for the built-in family */
bg_status bg_game_load(const char* spec_or_path, bg_game** out);

bg_status bg_game_save(const bg_game* game, const char* path);
bg_status bg_game_format(const bg_game* game, char** out_text);

int32_t bg_game_rows(const bg_game* game);
int32_t bg_game_cols(const bg_game* game);
bg_status bg_game_at(const bg_game* game, int32_t a, int32_t b, double* out);
void bg_game_free(bg_game* game);

/* mu has rows entries, nu has cols entries; both must sum to one */
bg_status bg_expected_loss(const bg_game* game, const double* mu,
                           const double* nu, double* out);
bg_status bg_exploitability_gap(const bg_game* game, const double* mu,
                                const double* nu, double* out);

/* mean reward of each row against ((1/2 + delta, 1/2 - delta)) on the
 * hard instance at eps; out2 receives two values */
bg_status bg_reward_vector_law(double epsilon, double delta, double* out2);

bg_status bg_kl_divergence(const double* p, const double* q, int32_t n,
                           double* out);

/* tolerance <= 0 selects the default 1e-6 */
bg_status bg_nash_value(const bg_game* game, double tolerance, double* value,
                        double* gap);

/* entropy-regularized saddle point at strength tau > 0. Anchors may be NULL
 * for uniform. tolerance <= 0 selects 1e-10. iterations may be NULL. */
bg_status bg_regularized_equilibrium(const bg_game* game, double tau,
                                     const double* mu_anchor,
                                     const double* nu_anchor, double tolerance,
                                     double* mu_out, double* nu_out,
                                     double* residual, int64_t* iterations);

/* --------------------------------------------------------------- learners */

typedef struct bg_learner bg_learner;

/* spec strings: "uniform", "exp3ix", "eoe:p=<real>[,u=<real>]",
 * "regexp3:T=<int>", "regexp3:tau=<real>", "doubling[:u=<real>]".
 * min_player != 0 treats the observed loss as its own; otherwise the
 * learner maximizes (sees 1 - loss). u in [0, 1) seeds the shared
 * exploration scheduler of the wrapper algorithms. */
bg_status bg_learner_create(const char* spec, int32_t min_player,
                            int32_t own_actions, int32_t opp_actions, double u,
                            bg_learner** out);

/* writes the round's mixed action into probs (own_actions entries) */
bg_status bg_learner_act(bg_learner* learner, double* probs);
bg_status bg_learner_observe(bg_learner* learner, int32_t own_action,
                             double loss);
bg_status bg_learner_output(const bg_learner* learner, double* probs);
int64_t bg_learner_rounds(const bg_learner* learner);
void bg_learner_free(bg_learner* learner);

/* --------------------------------------------------------------- episodes */

typedef struct bg_trace bg_trace;

/* Plays min_spec against max_spec for horizon rounds. diag_tau > 0 records
 * the divergence to the regularized saddle point at that strength;
 * record_output_eg != 0 evaluates each round's exploit recommendation. */
bg_status bg_episode_run(const bg_game* game, const char* min_spec,
                         const char* max_spec, int64_t horizon, uint64_t seed,
                         int32_t deterministic_loss, int32_t record_output_eg,
                         double diag_tau, bg_trace** out);

int64_t bg_trace_rounds(const bg_trace* trace);

/* columns: "t", "eg", "delta", "kl_star", "a", "b", "loss", "output_eg";
 * asking for a column the run did not record is an error */
bg_status bg_trace_value(const bg_trace* trace, int64_t row,
                         const char* column, double* out);

bg_status bg_trace_format_csv(const bg_trace* trace, char** out_text);
bg_status bg_trace_write_csv(const bg_trace* trace, const char* path);

/* realized information budget along the trace against the +-eps pair */
bg_status bg_trace_kl_budget(const bg_trace* trace, double epsilon,
                             double* exact, double* bound,
                             int64_t* first_action_rounds);
void bg_trace_free(bg_trace* trace);

/* ------------------------------------------------------------ rate curves */

typedef struct bg_curve bg_curve;

/* sources: "played_eg", "output_eg", "kl_star" (kl_star needs diag_tau > 0).
 * Replication r runs with seed bg_derive_seed(master_seed, r); the reduction
 * at each checkpoint is ((1/R) sum x^p)^(1/p). Results do not depend on
 * threads. */
bg_status bg_monte_carlo(const bg_game* game, const char* min_spec,
                         const char* max_spec, const int64_t* checkpoints,
                         int32_t n_checkpoints, int64_t reps, double p,
                         uint64_t master_seed, int32_t threads,
                         int32_t deterministic_loss, const char* source,
                         double diag_tau, bg_curve** out);

int32_t bg_curve_points(const bg_curve* curve);
bg_status bg_curve_point(const bg_curve* curve, int32_t index, int64_t* t,
                         double* estimate, double* std_error, int64_t* reps);
bg_status bg_curve_format_csv(const bg_curve* curve, char** out_text);
bg_status bg_curve_write_csv(const bg_curve* curve, const char* path);

/* least squares of log(estimate) on log(t) over checkpoints >= t_min */
bg_status bg_curve_fit(const bg_curve* curve, int64_t t_min, double* slope,
                       double* intercept, double* slope_se,
                       int32_t* points_used);
void bg_curve_free(bg_curve* curve);

/* log-log plot of several curves; labels[i] names curves[i] */
bg_status bg_curves_svg(const bg_curve* const* curves,
                        const char* const* labels, int32_t n,
                        const char* title, char** out_text);

/* writes up to count ascending rounds into out; *n_out gets the number
 * actually produced after deduplication */
bg_status bg_geometric_checkpoints(int64_t first, int64_t last, int32_t count,
                                   int64_t* out, int32_t* n_out);

/* ------------------------------------------------------- empirical checks */

typedef struct bg_report bg_report;

/* suites: "oracles", "lemma2", "thm3", "thm2", "thm4", "lowerbound",
 * "properties", "all". seed 0 keeps the suite's pinned default. */
bg_status bg_verify_suite(const char* suite, uint64_t seed, int32_t threads,
                          bg_report** out);

int32_t bg_report_checks(const bg_report* report);
/* pointer stays valid until bg_report_free */
const char* bg_report_line(const bg_report* report, int32_t index);
int32_t bg_report_ok(const bg_report* report);
void bg_report_free(bg_report* report);

/* ------------------------------------------------------------ rate table */

typedef struct bg_table1 bg_table1;

bg_status bg_table1_run(uint64_t seed, int64_t reps, int32_t threads,
                        bg_table1** out);
bg_status bg_table1_text(const bg_table1* table, char** out_text);
int32_t bg_table1_rows(const bg_table1* table);
bg_status bg_table1_row(const bg_table1* table, int32_t index,
                        char** algorithm, double* theoretical, double* fitted,
                        double* fit_se, int64_t* horizon, int64_t* reps);
int32_t bg_table1_curves(const bg_table1* table);
const char* bg_table1_curve_label(const bg_table1* table, int32_t index);
bg_status bg_table1_curve(const bg_table1* table, int32_t index,
                          bg_curve** out);
bg_status bg_table1_svg(const bg_table1* table, const char* title,
                        char** out_text);
void bg_table1_free(bg_table1* table);

/* ------------------------------------------------------ information floor */

typedef struct bg_lower_bound_report {
  double epsilon;
  int64_t T;
  double p;
  int64_t reps;
  double eg_plus;
  double se_plus;
  double eg_minus;
  double se_minus;
  double eg_worst;
  double mean_budget;
  double mean_bound;
} bg_lower_bound_report;

bg_status bg_lower_bound_epsilon(int64_t T, double p, double* out);

/* self-play of spec on the +-eps pair at the horizon's own perturbation
 * scale, plus the realized budget on the unperturbed instance */
bg_status bg_lower_bound_experiment(const char* spec, double p, int64_t T,
                                    int64_t reps, uint64_t master_seed,
                                    bg_lower_bound_report* out);

#ifdef __cplusplus
}
#endif

#endif /* BANDITGAMES_H */

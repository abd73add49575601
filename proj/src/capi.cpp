#include "banditgames.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bg/csv.hpp"
#include "bg/divergence.hpp"
#include "bg/equilibrium.hpp"
#include "bg/errors.hpp"
#include "bg/learner.hpp"
#include "bg/lowerbound.hpp"
#include "bg/montecarlo.hpp"
#include "bg/rng.hpp"
#include "bg/table1.hpp"
#include "bg/verify.hpp"

struct bg_game {
  bg::MatrixGame g;
};

struct bg_learner {
  std::unique_ptr<bg::Learner> l;
};

struct bg_trace {
  bg::EpisodeTrace t;
};

struct bg_curve {
  bg::RateCurve c;
};

struct bg_report {
  bg::Report r;
  std::vector<std::string> lines;
};

struct bg_table1 {
  bg::Table1Result t;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename F>
bg_status wrap(F&& body) noexcept {
  try {
    body();
    return BG_OK;
  } catch (const bg::DimensionError& e) {
    set_error(e.what());
    return BG_ERR_DIMENSION;
  } catch (const bg::SuiteError& e) {
    set_error(e.what());
    return BG_ERR_UNKNOWN_SUITE;
  } catch (const bg::DomainError& e) {
    set_error(e.what());
    return BG_ERR_DOMAIN;
  } catch (const bg::ConvergenceError& e) {
    set_error(e.what());
    return BG_ERR_NO_CONVERGENCE;
  } catch (const bg::ParseError& e) {
    set_error(e.what());
    return BG_ERR_PARSE;
  } catch (const bg::IoError& e) {
    set_error(e.what());
    return BG_ERR_IO;
  } catch (const bg::DiagnosticError& e) {
    set_error(e.what());
    return BG_ERR_MISSING_DIAGNOSTIC;
  } catch (const bg::ProtocolError& e) {
    set_error(e.what());
    return BG_ERR_PROTOCOL;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return BG_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return BG_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return BG_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bg::Policy read_policy(const double* probs, int n, const char* what) {
  require(probs != nullptr, what);
  return bg::Policy(std::vector<double>(probs, probs + n));
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void write_policy(const bg::Policy& pi, double* out) {
  for (int i = 0; i < pi.size(); ++i) out[i] = pi[i];
}

}  // namespace

extern "C" {

const char* bg_status_name(bg_status status) {
  switch (status) {
    case BG_OK: return "ok";
    case BG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BG_ERR_DIMENSION: return "dimension mismatch";
    case BG_ERR_DOMAIN: return "domain violation";
    case BG_ERR_NO_CONVERGENCE: return "no convergence";
    case BG_ERR_PARSE: return "parse failure";
    case BG_ERR_IO: return "io failure";
    case BG_ERR_MISSING_DIAGNOSTIC: return "diagnostic not recorded";
    case BG_ERR_UNKNOWN_SUITE: return "unknown suite";
    case BG_ERR_PROTOCOL: return "protocol violation";
    case BG_ERR_INTERNAL: return "internal failure";
  }
  return "unrecognized status";
}

const char* bg_last_error(void) { return g_last_error.c_str(); }

const char* bg_version(void) { return "1.0.0"; }

void bg_string_free(char* text) { std::free(text); }

uint64_t bg_derive_seed(uint64_t master_seed, uint64_t index) {
  return bg::derive_seed(master_seed, index);
}

/* games */

bg_status bg_game_create(int32_t rows, int32_t cols, const double* entries,
                         int32_t bernoulli, bg_game** out) {
  return wrap([&] {
    require(entries != nullptr, "null entries");
    require(out != nullptr, "null out");
    require(rows >= 1 && cols >= 1, "rows and cols must be at least 1");
    std::vector<double> data(entries,
                             entries + static_cast<std::size_t>(rows) * cols);
    bg::LossMode mode =
        bernoulli ? bg::LossMode::bernoulli : bg::LossMode::deterministic;
    *out = new bg_game{bg::MatrixGame(rows, cols, std::move(data), mode)};
  });
}

bg_status bg_game_hard_instance(double epsilon, bg_game** out) {
  return wrap([&] {
    require(out != nullptr, "null out");
    *out = new bg_game{bg::hard_instance(epsilon)};
  });
}

bg_status bg_game_parse(const char* text, bg_game** out) {
  return wrap([&] {
    require(text != nullptr, "null text");
    require(out != nullptr, "null out");
    *out = new bg_game{bg::parse_game(text)};
  });
}

bg_status bg_game_load(const char* spec_or_path, bg_game** out) {
  return wrap([&] {
    require(spec_or_path != nullptr, "null path");
    require(out != nullptr, "null out");
    *out = new bg_game{bg::load_game(spec_or_path)};
  });
}

bg_status bg_game_save(const bg_game* game, const char* path) {
  return wrap([&] {
    require(game != nullptr, "null game");
    require(path != nullptr, "null path");
    bg::save_game(game->g, path);
  });
}

bg_status bg_game_format(const bg_game* game, char** out_text) {
  return wrap([&] {
    require(game != nullptr, "null game");
    require(out_text != nullptr, "null out");
    *out_text = dup_string(bg::format_game(game->g));
  });
}

int32_t bg_game_rows(const bg_game* game) { return game ? game->g.rows() : 0; }
int32_t bg_game_cols(const bg_game* game) { return game ? game->g.cols() : 0; }

bg_status bg_game_at(const bg_game* game, int32_t a, int32_t b, double* out) {
  return wrap([&] {
    require(game != nullptr, "null game");
    require(out != nullptr, "null out");
    *out = game->g.at(a, b);
  });
}

void bg_game_free(bg_game* game) { delete game; }

bg_status bg_expected_loss(const bg_game* game, const double* mu,
                           const double* nu, double* out) {
  return wrap([&] {
    require(game != nullptr, "null game");
    require(out != nullptr, "null out");
    *out = bg::expected_loss(game->g, read_policy(mu, game->g.rows(), "null mu"),
                             read_policy(nu, game->g.cols(), "null nu"));
  });
}

bg_status bg_exploitability_gap(const bg_game* game, const double* mu,
                                const double* nu, double* out) {
  return wrap([&] {
    require(game != nullptr, "null game");
    require(out != nullptr, "null out");
    *out = bg::exploitability_gap(game->g,
                                  read_policy(mu, game->g.rows(), "null mu"),
                                  read_policy(nu, game->g.cols(), "null nu"));
  });
}

bg_status bg_reward_vector_law(double epsilon, double delta, double* out2) {
  return wrap([&] {
    require(out2 != nullptr, "null out");
    auto law = bg::reward_vector_law(epsilon, delta);
    out2[0] = law.first;
    out2[1] = law.second;
  });
}

bg_status bg_kl_divergence(const double* p, const double* q, int32_t n,
                           double* out) {
  return wrap([&] {
    require(out != nullptr, "null out");
    require(n >= 1, "n must be at least 1");
    *out = bg::kl_divergence(read_policy(p, n, "null p"),
                             read_policy(q, n, "null q"));
  });
}

bg_status bg_nash_value(const bg_game* game, double tolerance, double* value,
                        double* gap) {
  return wrap([&] {
    require(game != nullptr, "null game");
    require(value != nullptr, "null value");
    bg::NashResult res =
        bg::nash_value(game->g, tolerance > 0 ? tolerance : 1e-6);
    *value = res.value;
    if (gap) *gap = res.gap;
  });
}

bg_status bg_regularized_equilibrium(const bg_game* game, double tau,
                                     const double* mu_anchor,
                                     const double* nu_anchor, double tolerance,
                                     double* mu_out, double* nu_out,
                                     double* residual, int64_t* iterations) {
  return wrap([&] {
    require(game != nullptr, "null game");
    require(mu_out != nullptr, "null mu_out");
    require(nu_out != nullptr, "null nu_out");
    std::optional<bg::RegularizedGame> rg;
    if (mu_anchor || nu_anchor) {
      require(mu_anchor && nu_anchor, "give both anchors or neither");
      rg.emplace(game->g, tau,
                 bg::Profile{read_policy(mu_anchor, game->g.rows(), "null mu"),
                             read_policy(nu_anchor, game->g.cols(), "null nu")});
    } else {
      rg.emplace(game->g, tau);
    }
    bg::EquilibriumResult res = bg::solve_regularized_equilibrium(
        *rg, tolerance > 0 ? tolerance : 1e-10);
    write_policy(res.profile.mu, mu_out);
    write_policy(res.profile.nu, nu_out);
    if (residual) *residual = res.residual;
    if (iterations) *iterations = res.iterations;
  });
}

/* learners */

bg_status bg_learner_create(const char* spec, int32_t min_player,
                            int32_t own_actions, int32_t opp_actions, double u,
                            bg_learner** out) {
  return wrap([&] {
    require(spec != nullptr, "null spec");
    require(out != nullptr, "null out");
    bg::Side side = min_player ? bg::Side::min_player : bg::Side::max_player;
    *out = new bg_learner{
        bg::make_learner(spec, side, own_actions, opp_actions, u)};
  });
}

bg_status bg_learner_act(bg_learner* learner, double* probs) {
  return wrap([&] {
    require(learner != nullptr, "null learner");
    require(probs != nullptr, "null probs");
    write_policy(learner->l->act(), probs);
  });
}

bg_status bg_learner_observe(bg_learner* learner, int32_t own_action,
                             double loss) {
  return wrap([&] {
    require(learner != nullptr, "null learner");
    learner->l->observe(own_action, loss);
  });
}

bg_status bg_learner_output(const bg_learner* learner, double* probs) {
  return wrap([&] {
    require(learner != nullptr, "null learner");
    require(probs != nullptr, "null probs");
    write_policy(learner->l->output(), probs);
  });
}

int64_t bg_learner_rounds(const bg_learner* learner) {
  return learner ? learner->l->rounds() : 0;
}

void bg_learner_free(bg_learner* learner) { delete learner; }

/* episodes */

bg_status bg_episode_run(const bg_game* game, const char* min_spec,
                         const char* max_spec, int64_t horizon, uint64_t seed,
                         int32_t deterministic_loss, int32_t record_output_eg,
                         double diag_tau, bg_trace** out) {
  return wrap([&] {
    require(game != nullptr, "null game");
    require(min_spec != nullptr && max_spec != nullptr, "null learner spec");
    require(out != nullptr, "null out");
    bg::EpisodeOptions epi;
    epi.horizon = static_cast<long>(horizon);
    epi.seed = seed;
    epi.deterministic_loss = deterministic_loss != 0;
    epi.record_output_eg = record_output_eg != 0;
    std::optional<bg::Profile> star;
    if (diag_tau > 0.0) {
      star = bg::regularized_equilibrium(
          bg::RegularizedGame(game->g, diag_tau), 1e-11);
      epi.reg_star = &*star;
    }
    *out = new bg_trace{bg::run_episode(game->g, min_spec, max_spec, epi)};
  });
}

int64_t bg_trace_rounds(const bg_trace* trace) {
  return trace ? static_cast<int64_t>(trace->t.rows.size()) : 0;
}

bg_status bg_trace_value(const bg_trace* trace, int64_t row,
                         const char* column, double* out) {
  return wrap([&] {
    require(trace != nullptr, "null trace");
    require(column != nullptr, "null column");
    require(out != nullptr, "null out");
    require(row >= 0 && row < static_cast<int64_t>(trace->t.rows.size()),
            "row out of range");
    const bg::TraceRow& r = trace->t.rows[static_cast<std::size_t>(row)];
    std::string name(column);
    if (name == "t") {
      *out = static_cast<double>(r.t);
    } else if (name == "eg") {
      *out = r.eg;
    } else if (name == "a") {
      *out = r.a;
    } else if (name == "b") {
      *out = r.b;
    } else if (name == "loss") {
      *out = r.loss;
    } else if (name == "delta") {
      if (!r.has_delta) throw bg::DiagnosticError("delta was not recorded");
      *out = r.delta;
    } else if (name == "kl_star") {
      if (!r.has_kl_star) throw bg::DiagnosticError("kl_star was not recorded");
      *out = r.kl_star;
    } else if (name == "output_eg") {
      if (!r.has_output_eg)
        throw bg::DiagnosticError("output_eg was not recorded");
      *out = r.output_eg;
    } else {
      throw bg::ParseError("unknown trace column '" + name + "'");
    }
  });
}

bg_status bg_trace_format_csv(const bg_trace* trace, char** out_text) {
  return wrap([&] {
    require(trace != nullptr, "null trace");
    require(out_text != nullptr, "null out");
    *out_text = dup_string(bg::format_trace_csv(trace->t));
  });
}

bg_status bg_trace_write_csv(const bg_trace* trace, const char* path) {
  return wrap([&] {
    require(trace != nullptr, "null trace");
    require(path != nullptr, "null path");
    bg::write_text_file(path, bg::format_trace_csv(trace->t));
  });
}

bg_status bg_trace_kl_budget(const bg_trace* trace, double epsilon,
                             double* exact, double* bound,
                             int64_t* first_action_rounds) {
  return wrap([&] {
    require(trace != nullptr, "null trace");
    bg::KlBudget budget = bg::kl_budget(trace->t, epsilon);
    if (exact) *exact = budget.exact;
    if (bound) *bound = budget.bound;
    if (first_action_rounds) *first_action_rounds = budget.first_action_rounds;
  });
}

void bg_trace_free(bg_trace* trace) { delete trace; }

/* rate curves */

bg_status bg_monte_carlo(const bg_game* game, const char* min_spec,
                         const char* max_spec, const int64_t* checkpoints,
                         int32_t n_checkpoints, int64_t reps, double p,
                         uint64_t master_seed, int32_t threads,
                         int32_t deterministic_loss, const char* source,
                         double diag_tau, bg_curve** out) {
  return wrap([&] {
    require(game != nullptr, "null game");
    require(min_spec != nullptr && max_spec != nullptr, "null learner spec");
    require(checkpoints != nullptr && n_checkpoints >= 1, "no checkpoints");
    require(source != nullptr, "null source");
    require(out != nullptr, "null out");
    bg::McOptions mc;
    mc.checkpoints.assign(checkpoints, checkpoints + n_checkpoints);
    mc.reps = static_cast<long>(reps);
    mc.p = p;
    mc.master_seed = master_seed;
    mc.threads = threads;
    mc.deterministic_loss = deterministic_loss != 0;
    mc.source = bg::parse_curve_source(source);
    mc.diag_tau = diag_tau;
    *out = new bg_curve{bg::monte_carlo_lp(game->g, min_spec, max_spec, mc)};
  });
}

int32_t bg_curve_points(const bg_curve* curve) {
  return curve ? static_cast<int32_t>(curve->c.points.size()) : 0;
}

bg_status bg_curve_point(const bg_curve* curve, int32_t index, int64_t* t,
                         double* estimate, double* std_error, int64_t* reps) {
  return wrap([&] {
    require(curve != nullptr, "null curve");
    require(index >= 0 &&
                index < static_cast<int32_t>(curve->c.points.size()),
            "point index out of range");
    const bg::CurvePoint& pt = curve->c.points[static_cast<std::size_t>(index)];
    if (t) *t = pt.t;
    if (estimate) *estimate = pt.estimate;
    if (std_error) *std_error = pt.stderr_;
    if (reps) *reps = pt.reps;
  });
}

bg_status bg_curve_format_csv(const bg_curve* curve, char** out_text) {
  return wrap([&] {
    require(curve != nullptr, "null curve");
    require(out_text != nullptr, "null out");
    *out_text = dup_string(bg::format_curve_csv(curve->c));
  });
}

bg_status bg_curve_write_csv(const bg_curve* curve, const char* path) {
  return wrap([&] {
    require(curve != nullptr, "null curve");
    require(path != nullptr, "null path");
    bg::write_text_file(path, bg::format_curve_csv(curve->c));
  });
}

bg_status bg_curve_fit(const bg_curve* curve, int64_t t_min, double* slope,
                       double* intercept, double* slope_se,
                       int32_t* points_used) {
  return wrap([&] {
    require(curve != nullptr, "null curve");
    bg::RateFit fit = bg::fit_rate(curve->c, static_cast<long>(t_min));
    if (slope) *slope = fit.slope;
    if (intercept) *intercept = fit.intercept;
    if (slope_se) *slope_se = fit.stderr_slope;
    if (points_used) *points_used = fit.points_used;
  });
}

void bg_curve_free(bg_curve* curve) { delete curve; }

bg_status bg_curves_svg(const bg_curve* const* curves,
                        const char* const* labels, int32_t n,
                        const char* title, char** out_text) {
  return wrap([&] {
    require(curves != nullptr && labels != nullptr, "null curves or labels");
    require(n >= 1, "need at least one curve");
    require(title != nullptr, "null title");
    require(out_text != nullptr, "null out");
    std::vector<bg::LabeledCurve> list;
    list.reserve(static_cast<std::size_t>(n));
    for (int32_t i = 0; i < n; ++i) {
      require(curves[i] != nullptr && labels[i] != nullptr,
              "null curve or label");
      list.push_back({labels[i], curves[i]->c});
    }
    *out_text = dup_string(bg::curves_svg(list, title));
  });
}

bg_status bg_geometric_checkpoints(int64_t first, int64_t last, int32_t count,
                                   int64_t* out, int32_t* n_out) {
  return wrap([&] {
    require(out != nullptr && n_out != nullptr, "null out");
    std::vector<long> cps = bg::geometric_checkpoints(
        static_cast<long>(first), static_cast<long>(last), count);
    for (std::size_t i = 0; i < cps.size(); ++i)
      out[i] = static_cast<int64_t>(cps[i]);
    *n_out = static_cast<int32_t>(cps.size());
  });
}

/* empirical checks */

bg_status bg_verify_suite(const char* suite, uint64_t seed, int32_t threads,
                          bg_report** out) {
  return wrap([&] {
    require(suite != nullptr, "null suite");
    require(out != nullptr, "null out");
    bg::VerifyOptions options;
    options.seed = seed;
    options.threads = threads;
    auto handle = std::make_unique<bg_report>();
    handle->r = bg::verify_suite(suite, options);
    handle->lines = handle->r.lines();
    *out = handle.release();
  });
}

int32_t bg_report_checks(const bg_report* report) {
  return report ? static_cast<int32_t>(report->r.checks.size()) : 0;
}

const char* bg_report_line(const bg_report* report, int32_t index) {
  if (!report || index < 0 ||
      index >= static_cast<int32_t>(report->lines.size()))
    return nullptr;
  return report->lines[static_cast<std::size_t>(index)].c_str();
}

int32_t bg_report_ok(const bg_report* report) {
  return report && report->r.ok() ? 1 : 0;
}

void bg_report_free(bg_report* report) { delete report; }

/* rate table */

bg_status bg_table1_run(uint64_t seed, int64_t reps, int32_t threads,
                        bg_table1** out) {
  return wrap([&] {
    require(out != nullptr, "null out");
    require(reps >= 1, "reps must be at least 1");
    bg::Table1Options options;
    options.seed = seed;
    options.reps = static_cast<long>(reps);
    options.threads = threads;
    *out = new bg_table1{bg::table1(options)};
  });
}

bg_status bg_table1_text(const bg_table1* table, char** out_text) {
  return wrap([&] {
    require(table != nullptr, "null table");
    require(out_text != nullptr, "null out");
    *out_text = dup_string(bg::format_table1(table->t.rows));
  });
}

int32_t bg_table1_rows(const bg_table1* table) {
  return table ? static_cast<int32_t>(table->t.rows.size()) : 0;
}

bg_status bg_table1_row(const bg_table1* table, int32_t index,
                        char** algorithm, double* theoretical, double* fitted,
                        double* fit_se, int64_t* horizon, int64_t* reps) {
  return wrap([&] {
    require(table != nullptr, "null table");
    require(index >= 0 && index < static_cast<int32_t>(table->t.rows.size()),
            "row index out of range");
    const bg::Table1Row& row = table->t.rows[static_cast<std::size_t>(index)];
    if (algorithm) *algorithm = dup_string(row.algorithm);
    if (theoretical) *theoretical = row.theoretical;
    if (fitted) *fitted = row.fitted;
    if (fit_se) *fit_se = row.fit_se;
    if (horizon) *horizon = row.horizon;
    if (reps) *reps = row.reps;
  });
}

int32_t bg_table1_curves(const bg_table1* table) {
  return table ? static_cast<int32_t>(table->t.curves.size()) : 0;
}

const char* bg_table1_curve_label(const bg_table1* table, int32_t index) {
  if (!table || index < 0 ||
      index >= static_cast<int32_t>(table->t.curves.size()))
    return nullptr;
  return table->t.curves[static_cast<std::size_t>(index)].label.c_str();
}

bg_status bg_table1_curve(const bg_table1* table, int32_t index,
                          bg_curve** out) {
  return wrap([&] {
    require(table != nullptr, "null table");
    require(out != nullptr, "null out");
    require(index >= 0 && index < static_cast<int32_t>(table->t.curves.size()),
            "curve index out of range");
    *out = new bg_curve{table->t.curves[static_cast<std::size_t>(index)].curve};
  });
}

bg_status bg_table1_svg(const bg_table1* table, const char* title,
                        char** out_text) {
  return wrap([&] {
    require(table != nullptr, "null table");
    require(title != nullptr, "null title");
    require(out_text != nullptr, "null out");
    *out_text = dup_string(bg::curves_svg(table->t.curves, title));
  });
}

void bg_table1_free(bg_table1* table) { delete table; }

/* information floor */

bg_status bg_lower_bound_epsilon(int64_t T, double p, double* out) {
  return wrap([&] {
    require(out != nullptr, "null out");
    *out = bg::lower_bound_epsilon(static_cast<long>(T), p);
  });
}

bg_status bg_lower_bound_experiment(const char* spec, double p, int64_t T,
                                    int64_t reps, uint64_t master_seed,
                                    bg_lower_bound_report* out) {
  return wrap([&] {
    require(spec != nullptr, "null spec");
    require(out != nullptr, "null out");
    bg::LowerBoundReport r = bg::lower_bound_experiment(
        spec, p, static_cast<long>(T), static_cast<long>(reps), master_seed);
    out->epsilon = r.epsilon;
    out->T = r.T;
    out->p = r.p;
    out->reps = r.reps;
    out->eg_plus = r.eg_plus;
    out->se_plus = r.se_plus;
    out->eg_minus = r.eg_minus;
    out->se_minus = r.se_minus;
    out->eg_worst = r.eg_worst;
    out->mean_budget = r.mean_budget;
    out->mean_bound = r.mean_bound;
  });
}

}  // extern "C"

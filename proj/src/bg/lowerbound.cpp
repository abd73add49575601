#include "bg/lowerbound.hpp"

#include <cmath>

#include "bg/divergence.hpp"
#include "bg/montecarlo.hpp"
#include "bg/rng.hpp"

namespace bg {

double lower_bound_epsilon(long T, double p) {
  if (T < 1) throw DomainError("lower_bound_epsilon: horizon must be >= 1");
  if (!(p > 0.0 && p <= 2.0))
    throw DomainError("lower_bound_epsilon: p must lie in (0, 2]");
  return std::pow(static_cast<double>(T), -1.0 / (2.0 + p)) /
         (24.0 * std::sqrt(6.0));
}

KlBudget kl_budget(const EpisodeTrace& trace, double epsilon) {
  if (!(epsilon >= -1.0 / 12.0 && epsilon <= 1.0 / 12.0))
    throw DomainError("kl_budget: epsilon must lie in [-1/12, 1/12]");
  KlBudget out;
  for (const TraceRow& row : trace.rows) {
    if (!row.has_delta)
      throw DiagnosticError("kl_budget: trace lacks delta diagnostics");
    if (row.a != 0) continue;
    ++out.first_action_rounds;
    double d = row.delta;
    double base = 0.5 + d / 3.0;
    out.exact += bernoulli_kl(base, base - 2.0 * d * epsilon);
    out.bound += 24.0 * epsilon * epsilon * d * d;
  }
  if (out.exact > out.bound)
    throw DiagnosticError("kl_budget: realized budget exceeded its bound");
  return out;
}

LowerBoundReport lower_bound_experiment(const std::string& learner_spec,
                                        double p, long T, long reps,
                                        std::uint64_t master_seed) {
  if (reps < 1) throw DomainError("lower bound experiment: reps must be >= 1");
  LowerBoundReport report;
  report.epsilon = lower_bound_epsilon(T, p);
  report.T = T;
  report.p = p;
  report.reps = reps;

  McOptions mc;
  mc.checkpoints = {T};
  mc.reps = reps;
  mc.p = p;
  mc.master_seed = master_seed;
  mc.source = CurveSource::played_eg;

  RateCurve plus = monte_carlo_lp(hard_instance(report.epsilon), learner_spec,
                                  learner_spec, mc);
  RateCurve minus = monte_carlo_lp(hard_instance(-report.epsilon), learner_spec,
                                   learner_spec, mc);
  report.eg_plus = plus.points[0].estimate;
  report.se_plus = plus.points[0].stderr_;
  report.eg_minus = minus.points[0].estimate;
  report.se_minus = minus.points[0].stderr_;
  report.eg_worst = std::max(report.eg_plus, report.eg_minus);

  MatrixGame base = hard_instance(0.0);
  EpisodeOptions epi;
  epi.horizon = T;
  for (long rep = 0; rep < reps; ++rep) {
    epi.seed = derive_seed(master_seed, static_cast<std::uint64_t>(rep));
    EpisodeTrace trace = run_episode(base, learner_spec, learner_spec, epi);
    KlBudget budget = kl_budget(trace, report.epsilon);
    report.mean_budget += budget.exact;
    report.mean_bound += budget.bound;
  }
  report.mean_budget /= static_cast<double>(reps);
  report.mean_bound /= static_cast<double>(reps);
  return report;
}

}  // namespace bg

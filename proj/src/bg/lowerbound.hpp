#pragma once

#include <cstdint>
#include <string>

#include "bg/episode.hpp"

namespace bg {

// T^(-1/(2+p)) / (24 sqrt(6)), the perturbation scale at horizon T
double lower_bound_epsilon(long T, double p);

struct KlBudget {
  double exact = 0.0;   // realized KL the first-action observations carry
  double bound = 0.0;   // 24 eps^2 sum of delta^2 over first-action rounds
  long first_action_rounds = 0;
};

// Chain-rule KL between the observation laws at perturbation +-eps along a
// trace recorded on the unperturbed instance. Requires delta diagnostics.
// The exact sum never exceeds the quadratic bound; violation throws.
KlBudget kl_budget(const EpisodeTrace& trace, double epsilon);

struct LowerBoundReport {
  double epsilon = 0.0;
  long T = 0;
  double p = 2.0;
  long reps = 0;
  double eg_plus = 0.0;    // final-round played-profile gap on the +eps game
  double se_plus = 0.0;
  double eg_minus = 0.0;   // same on the -eps game
  double se_minus = 0.0;
  double eg_worst = 0.0;
  double mean_budget = 0.0;  // mean realized KL budget on the unperturbed game
  double mean_bound = 0.0;
};

// Plays the spec against itself on both perturbed instances and reports the
// final-round gaps next to the information budget accumulated at eps = 0.
LowerBoundReport lower_bound_experiment(const std::string& learner_spec,
                                        double p, long T, long reps,
                                        std::uint64_t master_seed);

}  // namespace bg

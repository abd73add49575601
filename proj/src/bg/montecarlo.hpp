#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bg/episode.hpp"

namespace bg {

struct CurvePoint {
  long t = 0;
  double estimate = 0.0;  // plug-in L^p norm across replications
  double stderr_ = 0.0;   // delta-method standard error of the estimate
  long reps = 0;
};

struct RateCurve {
  CurveSource source = CurveSource::played_eg;
  double p = 1.0;
  std::vector<CurvePoint> points;
};

struct McOptions {
  std::vector<long> checkpoints;
  long reps = 1;
  double p = 1.0;
  std::uint64_t master_seed = 0;
  int threads = 1;
  bool deterministic_loss = false;
  // tau for the regularized fixed point backing the kl_star source
  double diag_tau = 0.0;
  CurveSource source = CurveSource::played_eg;
};

// Runs reps independent episodes (seed = derive_seed(master_seed, rep)) and
// reduces each checkpoint column to ((1/R) sum X^p)^(1/p). The reduction is
// ordered by rep index, so results are byte-identical for any thread count.
RateCurve monte_carlo_lp(const MatrixGame& game, const std::string& min_spec,
                         const std::string& max_spec, const McOptions& options);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  int points_used = 0;
};

// least squares of log(estimate) on log(t) over points with t >= t_min and
// positive estimate; needs at least three such points
RateFit fit_rate(const RateCurve& curve, long t_min = 1);

// count rounds spread geometrically over [first, last], deduplicated
std::vector<long> geometric_checkpoints(long first, long last, int count);

}  // namespace bg

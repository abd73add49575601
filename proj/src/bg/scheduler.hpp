#pragma once

#include "bg/errors.hpp"

namespace bg {

// floor(s_new + u) - floor(s_prev + u), a {0,1} coin that is Bernoulli with
// mean s_new - s_prev when u is uniform on [0,1)
int shared_seed_bernoulli(double u, double s_prev, double s_new);

// cumulative-floor coin: both players feed the same probabilities and the
// same offset u, so they flip the same coin without communicating.
// step(p) returns whether the running sum crossed an integer boundary.
class FloorScheduler {
 public:
  explicit FloorScheduler(double u);

  bool step(double p);
  double cumulative() const { return sum_; }
  long floor_count() const { return prev_floor_; }
  void reset();

 private:
  double u_ = 0.0;
  double sum_ = 0.0;
  long prev_floor_ = 0;
};

}  // namespace bg

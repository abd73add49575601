#include "bg/scheduler.hpp"

#include <cmath>

namespace bg {

int shared_seed_bernoulli(double u, double s_prev, double s_new) {
  if (!(u >= 0.0 && u < 1.0))
    throw DomainError("scheduler: offset u must lie in [0, 1)");
  double inc = s_new - s_prev;
  if (!(inc >= 0.0 && inc <= 1.0))
    throw DomainError("scheduler: increment must lie in [0, 1]");
  return static_cast<int>(std::floor(s_new + u) - std::floor(s_prev + u));
}

FloorScheduler::FloorScheduler(double u) : u_(u) {
  if (!(u >= 0.0 && u < 1.0))
    throw DomainError("scheduler: offset u must lie in [0, 1)");
}

bool FloorScheduler::step(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("scheduler: probability must lie in [0, 1]");
  sum_ += p;
  long f = static_cast<long>(std::floor(sum_ + u_));
  bool hit = f > prev_floor_;
  prev_floor_ = f;
  return hit;
}

void FloorScheduler::reset() {
  sum_ = 0.0;
  prev_floor_ = 0;
}

}  // namespace bg

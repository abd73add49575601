#pragma once

#include <utility>
#include <vector>

#include "bg/learner.hpp"

namespace bg {

// eta = sqrt(log K / (K t)), gamma = eta / 2
std::pair<double, double> exp3ix_rates(long t, int K);

// Anytime EXP3-IX: plays softmax(-eta^t * cumulative IX estimates) and
// recommends the arithmetic mean of the policies played so far.
class Exp3Ix : public Learner {
 public:
  Exp3Ix(Side side, int actions);

  Policy output() const override;
  long guard_hits() const override { return guard_hits_; }

 protected:
  const Policy& do_act() override;
  void do_observe(int own_action, double loss) override;

 private:
  std::vector<double> cum_est_;
  std::vector<double> policy_sum_;
  Policy played_;
  double eta_ = 0.0;
  double gamma_ = 0.0;
  long guard_hits_ = 0;
};

}  // namespace bg

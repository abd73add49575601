#pragma once

#include <functional>
#include <memory>

#include "bg/learner.hpp"
#include "bg/scheduler.hpp"

namespace bg {

// t^(-p/(2+p)), the explore probability at round t
double eoe_explore_prob(long t, double p);

// Explore-or-exploit filter around an inner learner. Explore rounds play
// inner.act() and forward the loss; exploit rounds play inner.output() and
// discard the loss. The shared offset u makes both players' coin flips
// coincide round by round.
class Eoe : public Learner {
 public:
  Eoe(std::unique_ptr<Learner> inner, double p_exponent, double u);
  // custom explore-probability sequence, mainly for tests
  Eoe(std::unique_ptr<Learner> inner, std::function<double(long)> explore_prob,
      double u);

  Policy output() const override { return inner_->output(); }
  long guard_hits() const override { return inner_->guard_hits(); }

  bool last_explored() const { return explore_; }
  const Learner& inner() const { return *inner_; }

 protected:
  const Policy& do_act() override;
  void do_observe(int own_action, double loss) override;

 private:
  std::unique_ptr<Learner> inner_;
  std::function<double(long)> prob_fn_;
  FloorScheduler sched_;
  Policy played_;
  bool explore_ = false;
};

}  // namespace bg

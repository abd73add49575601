#pragma once

#include <memory>
#include <vector>

#include "bg/learner.hpp"
#include "bg/scheduler.hpp"

namespace bg {

struct DoublingSchedule {
  long T;   // loop length 32 * i * 2^i
  double S;  // rate divisor 8 * 2^i
};

DoublingSchedule doubling_schedule(int i);

// min(1, e^{j/S_i} / T_i) for 1 <= j <= T_i; nondecreasing in j
double doubling_prob(int i, long j);

// Doubling-trick meta-procedure: loop i trains a fresh candidate sized for
// horizon T_i; a shared-seed coin with rising probability p_i^j decides each
// round whether the candidate or the previous loop's instance plays. Old
// instances keep learning on their own clocks. Instance 0 is static uniform.
class Doubling : public Learner {
 public:
  Doubling(Side side, int own_actions, int opp_actions, double u);

  // the exploit arm, what the coin falls back to when not training
  Policy output() const override;
  long guard_hits() const override;

  int loop_index() const { return loop_; }
  long round_in_loop() const { return done_in_loop_; }
  bool last_trained() const { return trained_; }

 protected:
  const Policy& do_act() override;
  void do_observe(int own_action, double loss) override;

 private:
  void open_loop(int i);

  int opp_actions_;
  FloorScheduler sched_;
  std::vector<std::unique_ptr<Learner>> instances_;
  int loop_ = 0;
  long loop_length_ = 0;
  long done_in_loop_ = 0;
  bool trained_ = false;
  Learner* active_ = nullptr;
};

}  // namespace bg

#include "bg/doubling.hpp"

#include <cmath>

#include "bg/regexp3.hpp"

namespace bg {

DoublingSchedule doubling_schedule(int i) {
  if (i < 1) throw DomainError("doubling_schedule: loop index must be >= 1");
  if (i > 50) throw DomainError("doubling_schedule: loop index too large");
  double pow2 = std::ldexp(1.0, i);
  return DoublingSchedule{static_cast<long>(32.0 * i * pow2), 8.0 * pow2};
}

double doubling_prob(int i, long j) {
  DoublingSchedule s = doubling_schedule(i);
  if (j < 1 || j > s.T)
    throw DomainError("doubling_prob: round outside the loop");
  return std::min(1.0, std::exp(static_cast<double>(j) / s.S) /
                           static_cast<double>(s.T));
}

Doubling::Doubling(Side side, int own_actions, int opp_actions, double u)
    : Learner(side, own_actions), opp_actions_(opp_actions), sched_(u) {
  if (own_actions < 2 || opp_actions < 2)
    throw DimensionError("doubling: need at least two actions per side");
  instances_.push_back(std::make_unique<UniformLearner>(side, own_actions));
  open_loop(1);
}

void Doubling::open_loop(int i) {
  DoublingSchedule s = doubling_schedule(i);
  double tau = regexp3_params(actions(), opp_actions_, s.T).tau;
  instances_.push_back(std::make_unique<RegExp3>(side(), actions(), tau));
  loop_ = i;
  loop_length_ = s.T;
  done_in_loop_ = 0;
  sched_.reset();
}

const Policy& Doubling::do_act() {
  trained_ = sched_.step(doubling_prob(loop_, done_in_loop_ + 1));
  active_ = trained_ ? instances_.back().get()
                     : instances_[instances_.size() - 2].get();
  return active_->act();
}

void Doubling::do_observe(int own_action, double loss) {
  active_->observe(own_action, loss);
  ++done_in_loop_;
  if (done_in_loop_ == loop_length_) open_loop(loop_ + 1);
}

Policy Doubling::output() const {
  return instances_[instances_.size() - 2]->output();
}

long Doubling::guard_hits() const {
  long total = 0;
  for (const auto& inst : instances_) total += inst->guard_hits();
  return total;
}

}  // namespace bg

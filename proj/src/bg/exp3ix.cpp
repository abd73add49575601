#include "bg/exp3ix.hpp"

#include <cmath>
#include <cstddef>

namespace bg {

std::pair<double, double> exp3ix_rates(long t, int K) {
  if (t < 1) throw DomainError("exp3ix_rates: round must be >= 1");
  if (K < 2) throw DimensionError("exp3ix_rates: need at least two actions");
  double eta = std::sqrt(std::log(static_cast<double>(K)) /
                         (static_cast<double>(K) * static_cast<double>(t)));
  return {eta, eta / 2.0};
}

Exp3Ix::Exp3Ix(Side side, int actions)
    : Learner(side, actions),
      cum_est_(static_cast<std::size_t>(actions), 0.0),
      policy_sum_(static_cast<std::size_t>(actions), 0.0),
      played_(Policy::uniform(actions)) {
  if (actions < 2) throw DimensionError("exp3ix: need at least two actions");
}

const Policy& Exp3Ix::do_act() {
  auto [eta, gamma] = exp3ix_rates(rounds() + 1, actions());
  eta_ = eta;
  gamma_ = gamma;
  std::vector<double> logits(cum_est_.size());
  for (std::size_t i = 0; i < cum_est_.size(); ++i) logits[i] = -eta_ * cum_est_[i];
  played_ = Policy::from_logits(logits);
  return played_;
}

void Exp3Ix::do_observe(int own_action, double loss) {
  double eff = effective_loss(loss);
  double denom = played_[own_action] + gamma_;
  if (denom < 1e-300) {
    denom = 1e-300;
    ++guard_hits_;
  }
  cum_est_[static_cast<std::size_t>(own_action)] += eff / denom;
  for (std::size_t i = 0; i < policy_sum_.size(); ++i)
    policy_sum_[i] += played_[static_cast<int>(i)];
}

Policy Exp3Ix::output() const {
  if (rounds() == 0) return Policy::uniform(actions());
  return Policy::normalized(policy_sum_);
}

}  // namespace bg

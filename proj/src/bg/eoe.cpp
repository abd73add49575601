#include "bg/eoe.hpp"

#include <cmath>
#include <utility>

namespace bg {

double eoe_explore_prob(long t, double p) {
  if (t < 1) throw DomainError("eoe_explore_prob: round must be >= 1");
  if (!(p > 0.0 && p <= 2.0))
    throw DomainError("eoe_explore_prob: exponent must lie in (0, 2]");
  return std::pow(static_cast<double>(t), -p / (2.0 + p));
}

Eoe::Eoe(std::unique_ptr<Learner> inner, double p_exponent, double u)
    : Eoe(std::move(inner),
          [p_exponent](long t) { return eoe_explore_prob(t, p_exponent); }, u) {
  if (!(p_exponent > 0.0 && p_exponent <= 2.0))
    throw DomainError("eoe: exponent must lie in (0, 2]");
}

Eoe::Eoe(std::unique_ptr<Learner> inner, std::function<double(long)> explore_prob,
         double u)
    : Learner(inner->side(), inner->actions()),
      inner_(std::move(inner)),
      prob_fn_(std::move(explore_prob)),
      sched_(u),
      played_(Policy::uniform(actions())) {}

const Policy& Eoe::do_act() {
  explore_ = sched_.step(prob_fn_(rounds() + 1));
  if (explore_) return inner_->act();
  played_ = inner_->output();
  return played_;
}

void Eoe::do_observe(int own_action, double loss) {
  if (explore_) inner_->observe(own_action, loss);
}

}  // namespace bg

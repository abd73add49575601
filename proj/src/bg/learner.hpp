#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bg/errors.hpp"
#include "bg/policy.hpp"

namespace bg {

enum class Side { min_player, max_player };

// Sequential act/observe/output state machine. A learner only ever sees its
// own sampled action and the scalar loss, never the opponent's state.
class Learner {
 public:
  virtual ~Learner() = default;

  const Policy& act();
  void observe(int own_action, double loss);
  virtual Policy output() const = 0;

  // strictly-positive internal iterate, when the algorithm has one
  virtual const Policy* mirror_policy() const { return nullptr; }
  // times the estimator division guard fired
  virtual long guard_hits() const { return 0; }

  long rounds() const { return rounds_; }
  int actions() const { return actions_; }
  Side side() const { return side_; }

 protected:
  Learner(Side side, int actions);

  double effective_loss(double loss) const {
    return side_ == Side::min_player ? loss : 1.0 - loss;
  }

  virtual const Policy& do_act() = 0;
  virtual void do_observe(int own_action, double loss) = 0;

 private:
  Side side_;
  int actions_;
  long rounds_ = 0;
  bool awaiting_observe_ = false;
};

class UniformLearner : public Learner {
 public:
  UniformLearner(Side side, int actions)
      : Learner(side, actions), policy_(Policy::uniform(actions)) {}

  Policy output() const override { return policy_; }

 protected:
  const Policy& do_act() override { return policy_; }
  void do_observe(int, double) override {}

 private:
  Policy policy_;
};

// one-hot loss estimate divided by the played probability; the probability
// is floored at 1e-300 purely to avoid overflow, counted via guard_hits
std::vector<double> importance_estimate(double loss, int own_action,
                                        const Policy& policy, Side side,
                                        long* guard_hits = nullptr);

// spec strings: "exp3ix", "eoe:p=<real>[,u=<real>]", "regexp3:T=<int>",
// "regexp3:tau=<real>", "doubling[:u=<real>]", "uniform".
// default_u seeds the shared scheduler when the string gives no explicit u.
std::unique_ptr<Learner> make_learner(const std::string& spec, Side side,
                                      int own_actions, int opp_actions,
                                      double default_u);

}  // namespace bg

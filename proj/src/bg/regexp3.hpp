#pragma once

#include <vector>

#include "bg/learner.hpp"

namespace bg {

struct RegExp3Params {
  double tau;
  double eta(long t) const;  // 2 / (tau * (t + 1)), so tau * eta(t) = 2/(t+1)
};

// tau = ((A + B) / T)^{1/4} * sqrt(2 / (log A + log B))
RegExp3Params regexp3_params(int A, int B, long T);

// normalized geometric mixture mirror^{1-c} * anchor^{c}, c = tau_eta
Policy regexp3_mix(const Policy& mirror, const Policy& anchor, double tau_eta);

// normalized exponential-weights step played * exp(-eta * est_loss)
Policy regexp3_descent(const Policy& played, const std::vector<double>& est_loss,
                       double eta);

// Regularized EXP3: each round plays the mirror iterate pulled toward the
// uniform anchor by tau*eta^t, then applies a mirror step with the one-hot
// importance estimate. Last-iterate method: output() is the act() policy.
// All iterates live as normalized log-probabilities; probabilities are only
// materialized for sampling and inspection.
class RegExp3 : public Learner {
 public:
  RegExp3(Side side, int actions, double tau);

  Policy output() const override;
  const Policy* mirror_policy() const override { return &mirror_; }
  const std::vector<double>& mirror_logits() const { return lmirror_; }
  long guard_hits() const override { return guard_hits_; }
  double tau() const { return params_.tau; }

 protected:
  const Policy& do_act() override;
  void do_observe(int own_action, double loss) override;

 private:
  std::vector<double> mix_logits(long t) const;

  RegExp3Params params_;
  std::vector<double> lanchor_;
  std::vector<double> lmirror_;
  std::vector<double> lplayed_;
  Policy anchor_;
  Policy mirror_;
  Policy played_;
  long guard_hits_ = 0;
};

}  // namespace bg

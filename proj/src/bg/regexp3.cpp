#include "bg/regexp3.hpp"

#include <cmath>
#include <cstddef>

namespace bg {

double RegExp3Params::eta(long t) const {
  if (t < 1) throw DomainError("regexp3 eta: round must be >= 1");
  return 2.0 / (tau * (static_cast<double>(t) + 1.0));
}

RegExp3Params regexp3_params(int A, int B, long T) {
  if (A < 2 || B < 2) throw DimensionError("regexp3_params: need at least two actions per side");
  if (T < 1) throw DomainError("regexp3_params: horizon must be >= 1");
  double tau = std::pow((static_cast<double>(A) + static_cast<double>(B)) /
                            static_cast<double>(T),
                        0.25) *
               std::sqrt(2.0 / (std::log(static_cast<double>(A)) +
                                std::log(static_cast<double>(B))));
  return RegExp3Params{tau};
}

Policy regexp3_mix(const Policy& mirror, const Policy& anchor, double tau_eta) {
  if (!(tau_eta >= 0.0 && tau_eta <= 1.0))
    throw DomainError("regexp3_mix: tau_eta must lie in [0, 1]");
  if (mirror.size() != anchor.size())
    throw DimensionError("regexp3_mix: size mismatch");
  if (tau_eta == 1.0) return anchor;
  if (tau_eta == 0.0) return mirror;
  std::vector<double> logits(static_cast<std::size_t>(mirror.size()));
  for (int i = 0; i < mirror.size(); ++i)
    logits[static_cast<std::size_t>(i)] =
        (1.0 - tau_eta) * std::log(mirror[i]) + tau_eta * std::log(anchor[i]);
  return Policy::from_logits(logits);
}

Policy regexp3_descent(const Policy& played, const std::vector<double>& est_loss,
                       double eta) {
  if (!(eta > 0.0)) throw DomainError("regexp3_descent: eta must be positive");
  if (static_cast<int>(est_loss.size()) != played.size())
    throw DimensionError("regexp3_descent: size mismatch");
  std::vector<double> logits(est_loss.size());
  for (int i = 0; i < played.size(); ++i)
    logits[static_cast<std::size_t>(i)] =
        std::log(played[i]) - eta * est_loss[static_cast<std::size_t>(i)];
  return Policy::from_logits(logits);
}

namespace {

void renormalize(std::vector<double>& logits) {
  double z = logsumexp(logits);
  for (double& v : logits) v -= z;
}

Policy materialize(const std::vector<double>& logits) {
  std::vector<double> probs(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) probs[i] = std::exp(logits[i]);
  return Policy::normalized(std::move(probs));
}

}  // namespace

RegExp3::RegExp3(Side side, int actions, double tau)
    : Learner(side, actions),
      params_{tau},
      lanchor_(static_cast<std::size_t>(actions),
               -std::log(static_cast<double>(actions))),
      lmirror_(lanchor_),
      lplayed_(lanchor_),
      anchor_(Policy::uniform(actions)),
      mirror_(Policy::uniform(actions)),
      played_(Policy::uniform(actions)) {
  if (actions < 2) throw DimensionError("regexp3: need at least two actions");
  if (!(tau > 0.0)) throw DomainError("regexp3: tau must be positive");
}

std::vector<double> RegExp3::mix_logits(long t) const {
  double c = 2.0 / (static_cast<double>(t) + 1.0);
  if (c == 1.0) return lanchor_;
  std::vector<double> logits(lmirror_.size());
  for (std::size_t i = 0; i < logits.size(); ++i)
    logits[i] = (1.0 - c) * lmirror_[i] + c * lanchor_[i];
  renormalize(logits);
  return logits;
}

const Policy& RegExp3::do_act() {
  lplayed_ = mix_logits(rounds() + 1);
  played_ = rounds() == 0 ? anchor_ : materialize(lplayed_);
  return played_;
}

void RegExp3::do_observe(int own_action, double loss) {
  std::vector<double> est =
      importance_estimate(loss, own_action, played_, side(), &guard_hits_);
  double eta = params_.eta(rounds() + 1);
  lmirror_ = lplayed_;
  lmirror_[static_cast<std::size_t>(own_action)] -=
      eta * est[static_cast<std::size_t>(own_action)];
  renormalize(lmirror_);
  mirror_ = materialize(lmirror_);
}

Policy RegExp3::output() const {
  if (rounds() == 0) return anchor_;
  return materialize(mix_logits(rounds() + 1));
}

}  // namespace bg

#include "bg/policy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bg {

namespace {
constexpr double kSumTolerance = 1e-12;
}

double logsumexp(const std::vector<double>& x) {
  if (x.empty()) throw DimensionError("logsumexp: empty input");
  double m = -std::numeric_limits<double>::infinity();
  for (double v : x) m = std::max(m, v);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double v : x) s += std::exp(v - m);
  return m + std::log(s);
}

Policy::Policy(std::vector<double> probs) {
  if (probs.empty()) throw DimensionError("policy: empty");
  double sum = 0.0;
  for (double v : probs) {
    if (!(v >= 0.0)) throw DomainError("policy: negative or NaN entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw DomainError("policy: entries do not sum to one");
  p_ = std::move(probs);
}

Policy Policy::normalized(std::vector<double> weights) {
  if (weights.empty()) throw DimensionError("policy: empty");
  double sum = 0.0;
  for (double v : weights) {
    if (!(v >= 0.0)) throw DomainError("policy: negative or NaN weight");
    sum += v;
  }
  if (!(sum > 0.0) || !std::isfinite(sum))
    throw DomainError("policy: weights have no finite positive sum");
  Policy p;
  p.p_.resize(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) p.p_[i] = weights[i] / sum;
  return p;
}

Policy Policy::from_logits(const std::vector<double>& logits) {
  if (logits.empty()) throw DimensionError("policy: empty");
  double m = -std::numeric_limits<double>::infinity();
  for (double v : logits) {
    if (std::isnan(v)) throw DomainError("policy: NaN logit");
    m = std::max(m, v);
  }
  if (!std::isfinite(m)) throw DomainError("policy: all logits are -inf");
  std::vector<double> w(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    w[i] = std::exp(logits[i] - m);
    sum += w[i];
  }
  Policy p;
  p.p_.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) p.p_[i] = w[i] / sum;
  return p;
}

Policy Policy::uniform(int n) {
  if (n < 1) throw DimensionError("policy: size must be positive");
  Policy p;
  p.p_.assign(static_cast<std::size_t>(n), 1.0 / n);
  return p;
}

double l1_distance(const Policy& a, const Policy& b) {
  if (a.size() != b.size()) throw DimensionError("l1_distance: size mismatch");
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double profile_l1(const Profile& a, const Profile& b) {
  return l1_distance(a.mu, b.mu) + l1_distance(a.nu, b.nu);
}

}  // namespace bg

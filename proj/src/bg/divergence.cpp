#include "bg/divergence.hpp"

#include <cmath>
#include <limits>

namespace bg {

double kl_divergence(const Policy& p, const Policy& q) {
  if (p.size() != q.size()) throw DimensionError("kl_divergence: size mismatch");
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    s += p[i] * std::log(p[i] / q[i]);
  }
  // tiny negatives can appear when p ~ q
  return std::max(0.0, s);
}

double bernoulli_kl(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
    throw DomainError("bernoulli_kl: parameters must lie in [0, 1]");
  double s = 0.0;
  if (p > 0.0) {
    if (q == 0.0) return std::numeric_limits<double>::infinity();
    s += p * std::log(p / q);
  }
  if (p < 1.0) {
    if (q == 1.0) return std::numeric_limits<double>::infinity();
    s += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
  }
  return std::max(0.0, s);
}

double bregman_distance(const Profile& w, const Profile& wp) {
  return kl_divergence(w.mu, wp.mu) + kl_divergence(w.nu, wp.nu);
}

}  // namespace bg

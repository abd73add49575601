#pragma once

#include <vector>

#include "bg/errors.hpp"

namespace bg {

double logsumexp(const std::vector<double>& x);

// Probability vector over a finite action set. Entries are nonnegative and
// sum to one within 1e-12. All learner updates are carried out in log space
// and materialized through from_logits, so policies stay normalized no
// matter how skewed the weights get.
class Policy {
 public:
  explicit Policy(std::vector<double> probs);

  // rescales nonnegative weights by their sum
  static Policy normalized(std::vector<double> weights);
  // softmax; shifts by the max logit before exponentiating
  static Policy from_logits(const std::vector<double>& logits);
  static Policy uniform(int n);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& probs() const { return p_; }

  bool operator==(const Policy& o) const { return p_ == o.p_; }

 private:
  Policy() = default;
  std::vector<double> p_;
};

// one strategy per player
struct Profile {
  Policy mu;
  Policy nu;
};

double l1_distance(const Policy& a, const Policy& b);
double profile_l1(const Profile& a, const Profile& b);

}  // namespace bg

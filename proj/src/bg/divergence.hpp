#pragma once

#include "bg/policy.hpp"

namespace bg {

// sum_i p_i log(p_i / q_i) with 0 log 0 = 0; +inf when p puts mass where q
// has none
double kl_divergence(const Policy& p, const Policy& q);

// KL between Bernoulli(p) and Bernoulli(q)
double bernoulli_kl(double p, double q);

// KL(mu, mu') + KL(nu, nu'); the Bregman divergence of negative entropy on
// the product simplex
double bregman_distance(const Profile& w, const Profile& wp);

}  // namespace bg

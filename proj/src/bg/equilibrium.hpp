#pragma once

#include "bg/matrix_game.hpp"
#include "bg/policy.hpp"

namespace bg {

// Entropy-regularized game: loss L(mu, nu) + tau KL(mu, anchor.mu)
// - tau KL(nu, anchor.nu). Strongly monotone for tau > 0, so it has a
// unique equilibrium.
struct RegularizedGame {
  MatrixGame game;
  double tau;       // > 0
  Profile anchor;   // strictly positive

  RegularizedGame(MatrixGame g, double t, Profile a);
  RegularizedGame(MatrixGame g, double t);  // uniform anchor
};

// concatenated gradient field (L nu + tau(log mu - log mu0),
// (1 - mu^T L) + tau(log nu - log nu0)); tau may be zero here
std::vector<double> regularized_operator(const MatrixGame& g,
                                         const Profile& anchor, double tau,
                                         const Profile& w);
std::vector<double> regularized_operator(const RegularizedGame& rg,
                                         const Profile& w);

struct EquilibriumResult {
  Profile profile;
  double residual;
  long iterations;
};

// Mirror-prox (extragradient with entropic steps) on the regularized
// operator. The residual is the sup-norm gap of the smoothed best-response
// fixed-point conditions
//   mu(a) ~ mu0(a) exp(-(L nu)(a)/tau),  nu(b) ~ nu0(b) exp((mu^T L)(b)/tau).
// Linear convergence under strong monotonicity; throws ConvergenceError with
// the achieved residual if the iteration cap is hit.
EquilibriumResult solve_regularized_equilibrium(const RegularizedGame& rg,
                                                double tol = 1e-10,
                                                long max_iterations = 1000000);
Profile regularized_equilibrium(const RegularizedGame& rg, double tol = 1e-10);

struct NashResult {
  double value;
  Profile profile;
  double gap;  // exploitability of the returned profile
  long iterations;
};

// Unregularized equilibrium oracle. Games with min(A,B) <= 2 are solved
// exactly by vertex/crossing enumeration; larger games run averaged
// mirror-prox self-play on the exact loss vectors until the averaged profile
// has exploitability <= tol (the averaging-dynamics limit point).
NashResult nash_value(const MatrixGame& g, double tol = 1e-6,
                      long max_iterations = 20000000);

}  // namespace bg

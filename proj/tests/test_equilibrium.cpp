#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "bg/equilibrium.hpp"
#include "bg/matrix_game.hpp"
#include "bg/policy.hpp"

using namespace bg;

namespace {

const MatrixGame kFixed3x3(3, 3,
                           {0.62, 0.17, 0.43, 0.28, 0.71, 0.55, 0.09, 0.84,
                            0.36},
                           LossMode::bernoulli);

// independent fixed-point oracle: damped smoothed best responses
Profile damped_sbr(const RegularizedGame& rg, int iterations) {
  int A = rg.game.rows(), B = rg.game.cols();
  Policy mu = Policy::uniform(A), nu = Policy::uniform(B);
  double beta = rg.tau * rg.tau / (1.0 + rg.tau * rg.tau);
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> rows, cols;
    loss_to_rows(rg.game, nu, rows);
    loss_to_cols(rg.game, mu, cols);
    std::vector<double> lmu(static_cast<std::size_t>(A));
    std::vector<double> lnu(static_cast<std::size_t>(B));
    for (int a = 0; a < A; ++a)
      lmu[static_cast<std::size_t>(a)] =
          std::log(rg.anchor.mu[a]) - rows[static_cast<std::size_t>(a)] / rg.tau;
    for (int b = 0; b < B; ++b)
      lnu[static_cast<std::size_t>(b)] =
          std::log(rg.anchor.nu[b]) -
          (1.0 - cols[static_cast<std::size_t>(b)]) / rg.tau;
    Policy tmu = Policy::from_logits(lmu);
    Policy tnu = Policy::from_logits(lnu);
    std::vector<double> nmu(static_cast<std::size_t>(A));
    std::vector<double> nnu(static_cast<std::size_t>(B));
    for (int a = 0; a < A; ++a)
      nmu[static_cast<std::size_t>(a)] = (1.0 - beta) * mu[a] + beta * tmu[a];
    for (int b = 0; b < B; ++b)
      nnu[static_cast<std::size_t>(b)] = (1.0 - beta) * nu[b] + beta * tnu[b];
    mu = Policy::normalized(std::move(nmu));
    nu = Policy::normalized(std::move(nnu));
  }
  return {mu, nu};
}

}  // namespace

TEST_CASE("regularized game validation") {
  CHECK_THROWS_AS(RegularizedGame(kFixed3x3, 0.0), DomainError);
  CHECK_THROWS_AS(RegularizedGame(kFixed3x3, -1.0), DomainError);
  Profile bad{Policy::uniform(2), Policy::uniform(3)};
  CHECK_THROWS_AS(RegularizedGame(kFixed3x3, 0.5, bad), DimensionError);
  Profile zero{Policy(std::vector<double>{1.0, 0.0, 0.0}), Policy::uniform(3)};
  CHECK_THROWS_AS(RegularizedGame(kFixed3x3, 0.5, zero), DomainError);
}

TEST_CASE("regularized operator at tau zero is the plain field") {
  MatrixGame g(2, 2, {0.0, 1.0, 1.0, 0.0}, LossMode::bernoulli);
  Profile u{Policy::uniform(2), Policy::uniform(2)};
  std::vector<double> f = regularized_operator(g, u, 0.0, u);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f[2] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f[3] == doctest::Approx(0.5).epsilon(1e-15));

  Policy skew(std::vector<double>{0.25, 0.75});
  std::vector<double> f2 = regularized_operator(g, u, 0.0, {skew, skew});
  CHECK(f2[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(f2[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(f2[2] == doctest::Approx(1.0 - 0.75).epsilon(1e-15));
  CHECK(f2[3] == doctest::Approx(1.0 - 0.25).epsilon(1e-15));
}

TEST_CASE("uniform anchor on the symmetric instance stays uniform") {
  RegularizedGame rg(hard_instance(0.0), 0.5);
  EquilibriumResult res = solve_regularized_equilibrium(rg, 1e-12);
  CHECK(res.residual <= 1e-12);
  for (int i = 0; i < 2; ++i) {
    CHECK(res.profile.mu[i] == doctest::Approx(0.5).epsilon(1e-11));
    CHECK(res.profile.nu[i] == doctest::Approx(0.5).epsilon(1e-11));
  }
}

TEST_CASE("solution satisfies the smoothed best response conditions") {
  for (double tau : {0.2, 0.5, 2.0, 20.0}) {
    RegularizedGame rg(kFixed3x3, tau);
    Profile w = regularized_equilibrium(rg, 1e-11);
    std::vector<double> rows, cols;
    loss_to_rows(rg.game, w.nu, rows);
    loss_to_cols(rg.game, w.mu, cols);
    std::vector<double> lmu(3), lnu(3);
    for (int a = 0; a < 3; ++a)
      lmu[static_cast<std::size_t>(a)] =
          std::log(rg.anchor.mu[a]) - rows[static_cast<std::size_t>(a)] / tau;
    for (int b = 0; b < 3; ++b)
      lnu[static_cast<std::size_t>(b)] =
          std::log(rg.anchor.nu[b]) -
          (1.0 - cols[static_cast<std::size_t>(b)]) / tau;
    Policy smu = Policy::from_logits(lmu);
    Policy snu = Policy::from_logits(lnu);
    CHECK(l1_distance(w.mu, smu) <= 1e-9);
    CHECK(l1_distance(w.nu, snu) <= 1e-9);
  }
}

TEST_CASE("agrees with the damped fixed-point oracle") {
  RegularizedGame rg(kFixed3x3, 0.2);
  Profile solved = regularized_equilibrium(rg, 1e-12);
  Profile oracle = damped_sbr(rg, 4000);
  CHECK(profile_l1(solved, oracle) <= 1e-8);
}

TEST_CASE("huge tau pins the solution to the anchor") {
  Profile anchor{Policy(std::vector<double>{0.7, 0.2, 0.1}),
                 Policy(std::vector<double>{0.1, 0.1, 0.8})};
  RegularizedGame rg(kFixed3x3, 1000.0, anchor);
  Profile w = regularized_equilibrium(rg, 1e-11);
  CHECK(profile_l1(w, anchor) <= 1e-2);
}

TEST_CASE("iteration cap raises with the achieved residual") {
  RegularizedGame rg(kFixed3x3, 0.2);
  CHECK_THROWS_AS(solve_regularized_equilibrium(rg, 1e-13, 2),
                  ConvergenceError);
  try {
    solve_regularized_equilibrium(rg, 1e-13, 2);
  } catch (const ConvergenceError& e) {
    CHECK(e.achieved > 0.0);
  }
}

TEST_CASE("nash value on degenerate shapes") {
  MatrixGame one_row(1, 3, {0.2, 0.7, 0.4}, LossMode::bernoulli);
  NashResult r = nash_value(one_row);
  CHECK(r.value == 0.7);
  CHECK(r.gap == 0.0);
  CHECK(r.profile.nu[1] == 1.0);

  MatrixGame one_col(3, 1, {0.2, 0.7, 0.4}, LossMode::bernoulli);
  NashResult c = nash_value(one_col);
  CHECK(c.value == 0.2);
  CHECK(c.profile.mu[0] == 1.0);

  MatrixGame single(1, 1, {0.35}, LossMode::bernoulli);
  CHECK(nash_value(single).value == 0.35);
}

TEST_CASE("nash value on 2x2 games") {
  MatrixGame pennies(2, 2, {1.0, 0.0, 0.0, 1.0}, LossMode::bernoulli);
  NashResult r = nash_value(pennies);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.gap <= 1e-12);
  CHECK(r.profile.mu[0] == doctest::Approx(0.5).epsilon(1e-12));

  // saddle in pure strategies
  MatrixGame saddle(2, 2, {0.0, 1.0, 0.2, 0.4}, LossMode::bernoulli);
  NashResult s = nash_value(saddle);
  CHECK(s.value == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(s.gap <= 1e-12);

  MatrixGame flat(2, 2, {0.3, 0.3, 0.3, 0.3}, LossMode::bernoulli);
  CHECK(nash_value(flat).value == doctest::Approx(0.3).epsilon(1e-12));

  for (double eps : {0.0, 0.05, -1.0 / 12.0}) {
    NashResult h = nash_value(hard_instance(eps));
    CHECK(h.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(h.gap <= 1e-10);
  }
}

TEST_CASE("general solver matches the closed form on an embedded game") {
  // 2x2 core plus a dominated row and column; the value must not move
  MatrixGame core(2, 2, {0.6, 0.2, 0.1, 0.7}, LossMode::bernoulli);
  NashResult exact = nash_value(core);
  MatrixGame padded(3, 3,
                    {0.6, 0.2, 0.05, 0.1, 0.7, 0.05, 0.95, 0.95, 0.9},
                    LossMode::bernoulli);
  NashResult approx = nash_value(padded, 1e-5);
  CHECK(approx.gap <= 1e-5);
  CHECK(std::abs(approx.value - exact.value) <= 2e-5);
}

TEST_CASE("general solver reaches the cyclic equilibrium") {
  MatrixGame rps(3, 3, {0.5, 1.0, 0.0, 0.0, 0.5, 1.0, 1.0, 0.0, 0.5},
                 LossMode::bernoulli);
  NashResult r = nash_value(rps, 1e-5);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(r.gap <= 1e-5);
  for (int i = 0; i < 3; ++i)
    CHECK(r.profile.mu[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
  // the mixed 3x3 game cannot reach 1e-12 in 40 averaged steps
  CHECK_THROWS_AS(nash_value(kFixed3x3, 1e-12, 40), ConvergenceError);
}

#include "bg/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bg {

namespace {

std::vector<double> log_probs(const Policy& p) {
  std::vector<double> out(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(i)] = std::log(p[i]);
  return out;
}

void normalize_logits(std::vector<double>& x) {
  double z = logsumexp(x);
  for (double& v : x) v -= z;
}

void check_anchor(const MatrixGame& g, const Profile& anchor) {
  if (anchor.mu.size() != g.rows() || anchor.nu.size() != g.cols())
    throw DimensionError("regularized game: anchor does not match game");
  for (int a = 0; a < anchor.mu.size(); ++a)
    if (!(anchor.mu[a] > 0.0))
      throw DomainError("regularized game: anchor must be strictly positive");
  for (int b = 0; b < anchor.nu.size(); ++b)
    if (!(anchor.nu[b] > 0.0))
      throw DomainError("regularized game: anchor must be strictly positive");
}

}  // namespace

RegularizedGame::RegularizedGame(MatrixGame g, double t, Profile a)
    : game(std::move(g)), tau(t), anchor(std::move(a)) {
  if (!(tau > 0.0)) throw DomainError("regularized game: tau must be positive");
  check_anchor(game, anchor);
}

RegularizedGame::RegularizedGame(MatrixGame g, double t)
    : RegularizedGame(MatrixGame(g), t,
                      Profile{Policy::uniform(g.rows()), Policy::uniform(g.cols())}) {}

std::vector<double> regularized_operator(const MatrixGame& g,
                                         const Profile& anchor, double tau,
                                         const Profile& w) {
  if (!(tau >= 0.0)) throw DomainError("regularized_operator: tau must be >= 0");
  check_anchor(g, anchor);
  if (w.mu.size() != g.rows() || w.nu.size() != g.cols())
    throw DimensionError("regularized_operator: profile does not match game");
  for (int a = 0; a < w.mu.size(); ++a)
    if (!(w.mu[a] > 0.0))
      throw DomainError("regularized_operator: profile must be strictly positive");
  for (int b = 0; b < w.nu.size(); ++b)
    if (!(w.nu[b] > 0.0))
      throw DomainError("regularized_operator: profile must be strictly positive");

  const int A = g.rows(), B = g.cols();
  std::vector<double> out(static_cast<std::size_t>(A + B));
  std::vector<double> rows, cols;
  loss_to_rows(g, w.nu, rows);
  loss_to_cols(g, w.mu, cols);
  for (int a = 0; a < A; ++a)
    out[static_cast<std::size_t>(a)] =
        rows[static_cast<std::size_t>(a)] +
        tau * (std::log(w.mu[a]) - std::log(anchor.mu[a]));
  for (int b = 0; b < B; ++b)
    out[static_cast<std::size_t>(A + b)] =
        (1.0 - cols[static_cast<std::size_t>(b)]) +
        tau * (std::log(w.nu[b]) - std::log(anchor.nu[b]));
  return out;
}

std::vector<double> regularized_operator(const RegularizedGame& rg,
                                         const Profile& w) {
  return regularized_operator(rg.game, rg.anchor, rg.tau, w);
}

EquilibriumResult solve_regularized_equilibrium(const RegularizedGame& rg,
                                                double tol,
                                                long max_iterations) {
  if (!(tol > 0.0)) throw DomainError("regularized equilibrium: tol must be positive");
  if (max_iterations < 1)
    throw DomainError("regularized equilibrium: iteration cap must be positive");
  const MatrixGame& g = rg.game;
  const double tau = rg.tau;
  const int A = g.rows(), B = g.cols();
  // a literal step of min(1/4, tau) oscillates once tau exceeds a few units,
  // so cap the product step*tau at 1/2 instead; contraction holds either way
  const double step = std::min(0.25, 0.5 / tau);

  const std::vector<double> lmu0 = log_probs(rg.anchor.mu);
  const std::vector<double> lnu0 = log_probs(rg.anchor.nu);
  std::vector<double> lmu = lmu0, lnu = lnu0;
  std::vector<double> hmu(static_cast<std::size_t>(A)), hnu(static_cast<std::size_t>(B));
  std::vector<double> rows, cols, sbr(std::max(A, B));

  auto gradients = [&](const std::vector<double>& lm, const std::vector<double>& ln,
                       std::vector<double>& gmu, std::vector<double>& gnu) {
    std::vector<double> mu_p(static_cast<std::size_t>(A)), nu_p(static_cast<std::size_t>(B));
    for (int a = 0; a < A; ++a) mu_p[static_cast<std::size_t>(a)] = std::exp(lm[static_cast<std::size_t>(a)]);
    for (int b = 0; b < B; ++b) nu_p[static_cast<std::size_t>(b)] = std::exp(ln[static_cast<std::size_t>(b)]);
    gmu.assign(static_cast<std::size_t>(A), 0.0);
    gnu.assign(static_cast<std::size_t>(B), 0.0);
    for (int a = 0; a < A; ++a) {
      double s = 0.0;
      for (int b = 0; b < B; ++b) s += g.at(a, b) * nu_p[static_cast<std::size_t>(b)];
      gmu[static_cast<std::size_t>(a)] = s + tau * (lm[static_cast<std::size_t>(a)] - lmu0[static_cast<std::size_t>(a)]);
    }
    for (int b = 0; b < B; ++b) {
      double s = 0.0;
      for (int a = 0; a < A; ++a) s += g.at(a, b) * mu_p[static_cast<std::size_t>(a)];
      gnu[static_cast<std::size_t>(b)] = (1.0 - s) + tau * (ln[static_cast<std::size_t>(b)] - lnu0[static_cast<std::size_t>(b)]);
    }
  };

  auto residual = [&](const std::vector<double>& lm,
                      const std::vector<double>& ln) -> double {
    std::vector<double> mu_p(static_cast<std::size_t>(A)), nu_p(static_cast<std::size_t>(B));
    for (int a = 0; a < A; ++a) mu_p[static_cast<std::size_t>(a)] = std::exp(lm[static_cast<std::size_t>(a)]);
    for (int b = 0; b < B; ++b) nu_p[static_cast<std::size_t>(b)] = std::exp(ln[static_cast<std::size_t>(b)]);
    double r = 0.0;
    std::vector<double> t(static_cast<std::size_t>(A));
    for (int a = 0; a < A; ++a) {
      double s = 0.0;
      for (int b = 0; b < B; ++b) s += g.at(a, b) * nu_p[static_cast<std::size_t>(b)];
      t[static_cast<std::size_t>(a)] = lmu0[static_cast<std::size_t>(a)] - s / tau;
    }
    normalize_logits(t);
    for (int a = 0; a < A; ++a)
      r = std::max(r, std::abs(mu_p[static_cast<std::size_t>(a)] - std::exp(t[static_cast<std::size_t>(a)])));
    std::vector<double> t2(static_cast<std::size_t>(B));
    for (int b = 0; b < B; ++b) {
      double s = 0.0;
      for (int a = 0; a < A; ++a) s += g.at(a, b) * mu_p[static_cast<std::size_t>(a)];
      t2[static_cast<std::size_t>(b)] = lnu0[static_cast<std::size_t>(b)] + s / tau;
    }
    normalize_logits(t2);
    for (int b = 0; b < B; ++b)
      r = std::max(r, std::abs(nu_p[static_cast<std::size_t>(b)] - std::exp(t2[static_cast<std::size_t>(b)])));
    return r;
  };

  std::vector<double> gmu, gnu, ghmu, ghnu;
  double res = residual(lmu, lnu);
  long it = 0;
  while (res > tol) {
    if (it >= max_iterations)
      throw ConvergenceError("regularized equilibrium: iteration cap reached", res);
    gradients(lmu, lnu, gmu, gnu);
    for (int a = 0; a < A; ++a) hmu[static_cast<std::size_t>(a)] = lmu[static_cast<std::size_t>(a)] - step * gmu[static_cast<std::size_t>(a)];
    for (int b = 0; b < B; ++b) hnu[static_cast<std::size_t>(b)] = lnu[static_cast<std::size_t>(b)] - step * gnu[static_cast<std::size_t>(b)];
    normalize_logits(hmu);
    normalize_logits(hnu);
    gradients(hmu, hnu, ghmu, ghnu);
    for (int a = 0; a < A; ++a) lmu[static_cast<std::size_t>(a)] -= step * ghmu[static_cast<std::size_t>(a)];
    for (int b = 0; b < B; ++b) lnu[static_cast<std::size_t>(b)] -= step * ghnu[static_cast<std::size_t>(b)];
    normalize_logits(lmu);
    normalize_logits(lnu);
    ++it;
    res = residual(lmu, lnu);
  }

  std::vector<double> mu_p(static_cast<std::size_t>(A)), nu_p(static_cast<std::size_t>(B));
  for (int a = 0; a < A; ++a) mu_p[static_cast<std::size_t>(a)] = std::exp(lmu[static_cast<std::size_t>(a)]);
  for (int b = 0; b < B; ++b) nu_p[static_cast<std::size_t>(b)] = std::exp(lnu[static_cast<std::size_t>(b)]);
  return EquilibriumResult{
      Profile{Policy::normalized(std::move(mu_p)), Policy::normalized(std::move(nu_p))},
      res, it};
}

Profile regularized_equilibrium(const RegularizedGame& rg, double tol) {
  return solve_regularized_equilibrium(rg, tol).profile;
}

namespace {

// exact solve when one side has a single action
NashResult nash_degenerate(const MatrixGame& g) {
  const int A = g.rows(), B = g.cols();
  if (A == 1) {
    int best = 0;
    for (int b = 1; b < B; ++b)
      if (g.at(0, b) > g.at(0, best)) best = b;
    std::vector<double> nu(static_cast<std::size_t>(B), 0.0);
    nu[static_cast<std::size_t>(best)] = 1.0;
    Profile w{Policy::uniform(1), Policy(std::move(nu))};
    return NashResult{g.at(0, best), w, exploitability_gap(g, w), 0};
  }
  int best = 0;
  for (int a = 1; a < A; ++a)
    if (g.at(a, 0) < g.at(best, 0)) best = a;
  std::vector<double> mu(static_cast<std::size_t>(A), 0.0);
  mu[static_cast<std::size_t>(best)] = 1.0;
  Profile w{Policy(std::move(mu)), Policy::uniform(1)};
  return NashResult{g.at(best, 0), w, exploitability_gap(g, w), 0};
}

// vertex/crossing enumeration for 2x2; the upper/lower envelopes of two
// lines attain their optimum at an endpoint or at the crossing
NashResult nash_2x2(const MatrixGame& g) {
  const double a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 0), d = g.at(1, 1);
  const double denom = a - b - c + d;

  auto row_min = [&](double y) {
    return std::min(a * y + b * (1.0 - y), c * y + d * (1.0 - y));
  };
  auto col_max = [&](double x) {
    return std::max(a * x + c * (1.0 - x), b * x + d * (1.0 - x));
  };

  double best_y = 0.0, vmax = row_min(0.0);
  if (row_min(1.0) > vmax) { best_y = 1.0; vmax = row_min(1.0); }
  if (denom != 0.0) {
    double yc = (d - b) / denom;
    if (yc > 0.0 && yc < 1.0 && row_min(yc) > vmax) { best_y = yc; vmax = row_min(yc); }
  }

  double best_x = 0.0, vmin = col_max(0.0);
  if (col_max(1.0) < vmin) { best_x = 1.0; vmin = col_max(1.0); }
  if (denom != 0.0) {
    double xc = (d - c) / denom;
    if (xc > 0.0 && xc < 1.0 && col_max(xc) < vmin) { best_x = xc; vmin = col_max(xc); }
  }

  Profile w{Policy(std::vector<double>{best_x, 1.0 - best_x}),
            Policy(std::vector<double>{best_y, 1.0 - best_y})};
  return NashResult{0.5 * (vmin + vmax), w, exploitability_gap(g, w), 0};
}

}  // namespace

NashResult nash_value(const MatrixGame& g, double tol, long max_iterations) {
  if (!(tol > 0.0)) throw DomainError("nash_value: tol must be positive");
  if (max_iterations < 1)
    throw DomainError("nash_value: iteration cap must be positive");
  if (g.rows() == 1 || g.cols() == 1) return nash_degenerate(g);
  if (g.rows() == 2 && g.cols() == 2) return nash_2x2(g);

  const int A = g.rows(), B = g.cols();
  const double step = 0.25;
  std::vector<double> lmu(static_cast<std::size_t>(A), -std::log(static_cast<double>(A)));
  std::vector<double> lnu(static_cast<std::size_t>(B), -std::log(static_cast<double>(B)));
  std::vector<double> hmu(static_cast<std::size_t>(A)), hnu(static_cast<std::size_t>(B));
  std::vector<double> mu_p(static_cast<std::size_t>(A)), nu_p(static_cast<std::size_t>(B));
  std::vector<double> sum_mu(static_cast<std::size_t>(A), 0.0), sum_nu(static_cast<std::size_t>(B), 0.0);

  auto field = [&](const std::vector<double>& mp, const std::vector<double>& np,
                   std::vector<double>& gmu, std::vector<double>& gnu) {
    gmu.assign(static_cast<std::size_t>(A), 0.0);
    gnu.assign(static_cast<std::size_t>(B), 0.0);
    for (int i = 0; i < A; ++i) {
      double s = 0.0;
      for (int j = 0; j < B; ++j) s += g.at(i, j) * np[static_cast<std::size_t>(j)];
      gmu[static_cast<std::size_t>(i)] = s;
    }
    for (int j = 0; j < B; ++j) {
      double s = 0.0;
      for (int i = 0; i < A; ++i) s += g.at(i, j) * mp[static_cast<std::size_t>(i)];
      gnu[static_cast<std::size_t>(j)] = 1.0 - s;
    }
  };

  std::vector<double> gmu, gnu, ghmu, ghnu;
  constexpr long kCheckEvery = 50;
  double gap = std::numeric_limits<double>::infinity();
  for (long it = 1; it <= max_iterations; ++it) {
    for (int i = 0; i < A; ++i) mu_p[static_cast<std::size_t>(i)] = std::exp(lmu[static_cast<std::size_t>(i)]);
    for (int j = 0; j < B; ++j) nu_p[static_cast<std::size_t>(j)] = std::exp(lnu[static_cast<std::size_t>(j)]);
    field(mu_p, nu_p, gmu, gnu);
    for (int i = 0; i < A; ++i) hmu[static_cast<std::size_t>(i)] = lmu[static_cast<std::size_t>(i)] - step * gmu[static_cast<std::size_t>(i)];
    for (int j = 0; j < B; ++j) hnu[static_cast<std::size_t>(j)] = lnu[static_cast<std::size_t>(j)] - step * gnu[static_cast<std::size_t>(j)];
    normalize_logits(hmu);
    normalize_logits(hnu);
    std::vector<double> hmu_p(static_cast<std::size_t>(A)), hnu_p(static_cast<std::size_t>(B));
    for (int i = 0; i < A; ++i) hmu_p[static_cast<std::size_t>(i)] = std::exp(hmu[static_cast<std::size_t>(i)]);
    for (int j = 0; j < B; ++j) hnu_p[static_cast<std::size_t>(j)] = std::exp(hnu[static_cast<std::size_t>(j)]);
    field(hmu_p, hnu_p, ghmu, ghnu);
    for (int i = 0; i < A; ++i) lmu[static_cast<std::size_t>(i)] -= step * ghmu[static_cast<std::size_t>(i)];
    for (int j = 0; j < B; ++j) lnu[static_cast<std::size_t>(j)] -= step * ghnu[static_cast<std::size_t>(j)];
    normalize_logits(lmu);
    normalize_logits(lnu);
    for (int i = 0; i < A; ++i) sum_mu[static_cast<std::size_t>(i)] += hmu_p[static_cast<std::size_t>(i)];
    for (int j = 0; j < B; ++j) sum_nu[static_cast<std::size_t>(j)] += hnu_p[static_cast<std::size_t>(j)];

    if (it % kCheckEvery == 0 || it == max_iterations) {
      Profile avg{Policy::normalized(sum_mu), Policy::normalized(sum_nu)};
      gap = exploitability_gap(g, avg);
      if (gap <= tol)
        return NashResult{expected_loss(g, avg.mu, avg.nu), avg, gap, it};
    }
  }
  throw ConvergenceError("nash_value: iteration cap reached", gap);
}

}  // namespace bg

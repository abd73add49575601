#include "bg/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "bg/csv.hpp"
#include "bg/divergence.hpp"
#include "bg/doubling.hpp"
#include "bg/eoe.hpp"
#include "bg/lowerbound.hpp"
#include "bg/montecarlo.hpp"
#include "bg/regexp3.hpp"
#include "bg/rng.hpp"

namespace bg {

bool Report::ok() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::vector<std::string> Report::lines() const {
  std::vector<std::string> out;
  out.reserve(checks.size());
  for (const Check& c : checks) {
    std::string line = c.pass ? "[pass] " : "[FAIL] ";
    line += c.group + "/" + c.name + ": measured=" + short_num(c.measured) +
            " bound=" + short_num(c.bound) + " margin=" + short_num(c.margin);
    if (!c.note.empty()) line += " (" + c.note + ")";
    out.push_back(line);
  }
  return out;
}

namespace {

Check le_check(const std::string& group, const std::string& name,
               double measured, double bound, const std::string& note) {
  Check c;
  c.group = group;
  c.name = name;
  c.measured = measured;
  c.bound = bound;
  c.margin = bound - measured;
  c.pass = measured <= bound;
  c.note = note;
  return c;
}

Check ge_check(const std::string& group, const std::string& name,
               double measured, double bound, const std::string& note) {
  Check c;
  c.group = group;
  c.name = name;
  c.measured = measured;
  c.bound = bound;
  c.margin = measured - bound;
  c.pass = measured >= bound;
  c.note = note;
  return c;
}

MatrixGame random_game(Rng& rng, int A, int B) {
  std::vector<double> entries(static_cast<std::size_t>(A) * B);
  for (double& e : entries) e = rng.uniform01();
  return MatrixGame(A, B, std::move(entries), LossMode::bernoulli);
}

// full-support random point: Dirichlet(1) draw blended with uniform
Policy random_full_support(Rng& rng, int K) {
  std::vector<double> w(static_cast<std::size_t>(K));
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - rng.uniform01());
    total += v;
  }
  for (int i = 0; i < K; ++i)
    w[static_cast<std::size_t>(i)] =
        0.9 * w[static_cast<std::size_t>(i)] / total + 0.1 / K;
  return Policy::normalized(std::move(w));
}

// exact expectation over the finite outcome space {(a, b, loss)}
template <typename F>
void enumerate_outcomes(const MatrixGame& g, const Policy& mu, const Policy& nu,
                        F&& f) {
  for (int a = 0; a < g.rows(); ++a)
    for (int b = 0; b < g.cols(); ++b) {
      double pab = mu[a] * nu[b];
      double m = g.at(a, b);
      if (m > 0.0) f(pab * m, a, b, 1.0);
      if (m < 1.0) f(pab * (1.0 - m), a, b, 0.0);
    }
}

const char* kFixed3x3Entries =
    "3 3 bernoulli\n"
    "0.62 0.17 0.43\n"
    "0.28 0.71 0.55\n"
    "0.09 0.84 0.36\n";

Report oracles_suite(std::uint64_t seed, int) {
  Report report;
  report.suite = "oracles";
  Rng rng(seed ? seed : 1101);

  // enumerated estimator expectation against the true loss/reward vectors
  double worst_est = 0.0;
  for (int iter = 0; iter < 100; ++iter) {
    int A = rng.uniform_int(2, 5), B = rng.uniform_int(2, 5);
    MatrixGame g = random_game(rng, A, B);
    Policy mu = random_full_support(rng, A);
    Policy nu = random_full_support(rng, B);
    std::vector<double> emin(static_cast<std::size_t>(A), 0.0);
    std::vector<double> emax(static_cast<std::size_t>(B), 0.0);
    enumerate_outcomes(g, mu, nu, [&](double p, int a, int b, double loss) {
      std::vector<double> em = importance_estimate(loss, a, mu, Side::min_player);
      std::vector<double> ex = importance_estimate(loss, b, nu, Side::max_player);
      for (int i = 0; i < A; ++i) emin[static_cast<std::size_t>(i)] += p * em[static_cast<std::size_t>(i)];
      for (int j = 0; j < B; ++j) emax[static_cast<std::size_t>(j)] += p * ex[static_cast<std::size_t>(j)];
    });
    std::vector<double> rows, cols;
    loss_to_rows(g, nu, rows);
    loss_to_cols(g, mu, cols);
    for (int i = 0; i < A; ++i)
      worst_est = std::max(worst_est,
                           std::abs(emin[static_cast<std::size_t>(i)] - rows[static_cast<std::size_t>(i)]));
    for (int j = 0; j < B; ++j)
      worst_est = std::max(worst_est,
                           std::abs(emax[static_cast<std::size_t>(j)] -
                                    (1.0 - cols[static_cast<std::size_t>(j)])));
  }
  report.checks.push_back(le_check(
      "unbiasedness", "enumerated estimator expectation deviation", worst_est,
      1e-12, "100 random games, sizes 2..5"));

  // enumerated one-step KL cost of the mirror update
  double worst_ratio = 0.0;
  const double etas[] = {0.01, 0.1, 0.5};
  for (int iter = 0; iter < 100; ++iter) {
    int A = rng.uniform_int(2, 5), B = rng.uniform_int(2, 5);
    MatrixGame g = random_game(rng, A, B);
    Policy mu = random_full_support(rng, A);
    Policy nu = random_full_support(rng, B);
    for (double eta : etas) {
      double ekl_min = 0.0, ekl_max = 0.0;
      enumerate_outcomes(g, mu, nu, [&](double p, int a, int b, double loss) {
        std::vector<double> em = importance_estimate(loss, a, mu, Side::min_player);
        std::vector<double> ex = importance_estimate(loss, b, nu, Side::max_player);
        ekl_min += p * kl_divergence(mu, regexp3_descent(mu, em, eta));
        ekl_max += p * kl_divergence(nu, regexp3_descent(nu, ex, eta));
      });
      worst_ratio = std::max(worst_ratio, ekl_min / (eta * eta * A / 2.0));
      worst_ratio = std::max(worst_ratio, ekl_max / (eta * eta * B / 2.0));
    }
  }
  report.checks.push_back(le_check(
      "second-order", "enumerated E[KL(played, updated)] over eta^2 K/2",
      worst_ratio, 1.0, "100 random states, eta in {0.01, 0.1, 0.5}"));

  // floor-coin scheduler: pathwise inequality and grid mean
  const long horizon = 10000;
  std::vector<std::vector<double>> sequences(3);
  sequences[0].assign(static_cast<std::size_t>(horizon), 0.5);
  sequences[1].resize(static_cast<std::size_t>(horizon));
  for (long t = 1; t <= horizon; ++t)
    sequences[1][static_cast<std::size_t>(t - 1)] =
        1.0 / std::sqrt(static_cast<double>(t));
  sequences[2].reserve(static_cast<std::size_t>(horizon));
  for (int i = 1; static_cast<long>(sequences[2].size()) < horizon; ++i) {
    DoublingSchedule sch = doubling_schedule(i);
    for (long j = 1; j <= sch.T && static_cast<long>(sequences[2].size()) < horizon; ++j)
      sequences[2].push_back(doubling_prob(i, j));
  }
  const char* seq_names[] = {"constant 0.5", "inverse sqrt", "doubling ramp"};
  for (int s = 0; s < 3; ++s) {
    const std::vector<double>& p = sequences[static_cast<std::size_t>(s)];
    std::vector<long> hits(static_cast<std::size_t>(horizon), 0);
    long min_slack = std::numeric_limits<long>::max();
    for (int iu = 0; iu < 1000; ++iu) {
      double u = iu / 1000.0;
      double sum = 0.0;
      long prev_floor = 0, run = 0;
      for (long t = 0; t < horizon; ++t) {
        sum += p[static_cast<std::size_t>(t)];
        long f = static_cast<long>(std::floor(sum + u));
        long b = f - prev_floor;
        prev_floor = f;
        run += b;
        hits[static_cast<std::size_t>(t)] += b;
        min_slack = std::min(min_slack, run - static_cast<long>(std::floor(sum)));
      }
    }
    double max_dev = 0.0;
    for (long t = 0; t < horizon; ++t)
      max_dev = std::max(max_dev, std::abs(hits[static_cast<std::size_t>(t)] / 1000.0 -
                              p[static_cast<std::size_t>(t)]));
    report.checks.push_back(ge_check(
        "scheduler", std::string("count floor inequality, ") + seq_names[s],
        static_cast<double>(min_slack), 0.0, "min over 1000-point u grid, t <= 1e4"));
    report.checks.push_back(le_check(
        "scheduler", std::string("grid mean matches probability, ") + seq_names[s],
        max_dev, 2e-3, "max over t"));
  }
  return report;
}

Report lemma2_suite(std::uint64_t seed, int threads) {
  Report report;
  report.suite = "lemma2";
  std::uint64_t seed0 = seed ? seed : 1201;
  struct GameCase {
    const char* label;
    MatrixGame game;
  };
  const GameCase games[] = {
      {"M0", hard_instance(0.0)},
      {"fixed 3x3", parse_game(kFixed3x3Entries)},
  };
  const double taus[] = {0.2, 0.5};
  std::uint64_t config = 0;
  for (const GameCase& gc : games) {
    double dims = gc.game.rows() + gc.game.cols();
    for (double tau : taus) {
      McOptions mc;
      mc.checkpoints = {10, 100, 1000, 10000};
      mc.reps = 200;
      mc.p = 1.0;
      mc.master_seed = derive_seed(seed0, config++);
      mc.threads = threads;
      mc.source = CurveSource::kl_star;
      mc.diag_tau = tau;
      std::string spec = "regexp3:tau=" + format_double(tau);
      RateCurve curve = monte_carlo_lp(gc.game, spec, spec, mc);
      for (const CurvePoint& pt : curve.points) {
        double theory = 2.0 * dims / (tau * tau * static_cast<double>(pt.t));
        report.checks.push_back(le_check(
            "contraction",
            std::string(gc.label) + ", tau=" + short_num(tau) + ", t=" +
                std::to_string(pt.t),
            pt.estimate, theory + 2.0 * pt.stderr_,
            "mean KL to fixed point, R=200"));
      }
    }
  }
  return report;
}

Report thm3_suite(std::uint64_t seed, int threads) {
  Report report;
  report.suite = "thm3";
  std::uint64_t seed0 = seed ? seed : 1301;
  struct GameCase {
    const char* label;
    MatrixGame game;
  };
  const GameCase games[] = {
      {"M0", hard_instance(0.0)},
      {"matching pennies",
       MatrixGame(2, 2, {1.0, 0.0, 0.0, 1.0}, LossMode::bernoulli)},
  };
  const long horizons[] = {1000, 10000, 100000, 1000000};
  std::uint64_t config = 0;
  for (const GameCase& gc : games) {
    RateCurve sweep;
    sweep.p = 2.0;
    for (long T : horizons) {
      McOptions mc;
      mc.checkpoints = {T};
      mc.reps = 100;
      mc.p = 2.0;
      mc.master_seed = derive_seed(seed0, config++);
      mc.threads = threads;
      std::string spec = "regexp3:T=" + std::to_string(T);
      RateCurve curve = monte_carlo_lp(gc.game, spec, spec, mc);
      const CurvePoint& pt = curve.points[0];
      sweep.points.push_back(pt);
      double bound = 3.0 * std::sqrt(2.0) *
                     std::pow(4.0 / static_cast<double>(T), 0.25) *
                     std::sqrt(std::log(4.0));
      report.checks.push_back(le_check(
          "horizon-bound", std::string(gc.label) + ", T=" + std::to_string(T),
          pt.estimate, bound, "L2 gap of final played profile, R=100"));
    }
    RateFit fit = fit_rate(sweep, 1);
    report.checks.push_back(ge_check(
        "rate", std::string(gc.label) + " slope lower window", fit.slope, -0.45,
        "theory -0.25, fit se " + short_num(fit.stderr_slope)));
    report.checks.push_back(le_check(
        "rate", std::string(gc.label) + " slope upper window", fit.slope, -0.15,
        "theory -0.25"));
  }
  return report;
}

Report thm2_suite(std::uint64_t seed, int threads) {
  Report report;
  report.suite = "thm2";
  std::uint64_t seed0 = seed ? seed : 1401;
  MatrixGame game = hard_instance(0.0);
  const std::vector<long> cps = {10,   32,    100,   316,  1000,
                                 3162, 10000, 31623, 100000};
  std::uint64_t config = 0;
  for (double p : {1.0, 2.0}) {
    McOptions mc;
    mc.checkpoints = cps;
    mc.reps = 100;
    mc.p = p;
    mc.master_seed = derive_seed(seed0, config++);
    mc.threads = threads;
    std::string spec = "eoe:p=" + short_num(p);
    RateCurve curve = monte_carlo_lp(game, spec, spec, mc);
    for (const CurvePoint& pt : curve.points) {
      double t = static_cast<double>(pt.t);
      double bound = 17.0 * 2.0 * std::pow(2.0, 1.0 / p) *
                     std::pow(t, -1.0 / (2.0 + p)) *
                     std::log(16.0 * t * t / p);
      report.checks.push_back(
          le_check("filter-bound",
                   "p=" + short_num(p) + ", t=" + std::to_string(pt.t),
                   pt.estimate, bound, "Lp gap of played profile, R=100"));
    }
  }
  McOptions mc;
  mc.checkpoints = cps;
  mc.reps = 100;
  mc.p = 2.0;
  mc.master_seed = derive_seed(seed0, config++);
  mc.threads = threads;
  mc.source = CurveSource::output_eg;
  RateCurve avg = monte_carlo_lp(game, "exp3ix", "exp3ix", mc);
  // fit the tail; the pre-asymptotic region below t=1000 is still flat
  RateFit fit = fit_rate(avg, 1000);
  report.checks.push_back(ge_check("average-rate", "averaged-output slope lower window",
                                   fit.slope, -0.65,
                                   "theory -0.5, fit se " + short_num(fit.stderr_slope)));
  report.checks.push_back(le_check("average-rate", "averaged-output slope upper window",
                                   fit.slope, -0.40, "theory -0.5"));
  return report;
}

Report thm4_suite(std::uint64_t seed, int threads) {
  Report report;
  report.suite = "thm4";
  std::uint64_t seed0 = seed ? seed : 1501;
  MatrixGame game = hard_instance(0.0);
  long total = 0;
  for (int i = 1; i <= 6; ++i) total += doubling_schedule(i).T;
  McOptions mc;
  mc.checkpoints = geometric_checkpoints(32, total, 20);
  mc.reps = 100;
  mc.p = 2.0;
  mc.master_seed = derive_seed(seed0, 0);
  mc.threads = threads;
  RateCurve curve = monte_carlo_lp(game, "doubling", "doubling", mc);
  for (const CurvePoint& pt : curve.points) {
    double t = static_cast<double>(pt.t);
    double bound = 30.0 * std::pow(4.0 / t, 0.25) *
                   std::sqrt(std::log(4.0) * std::log(t));
    report.checks.push_back(le_check(
        "meta-bound", "t=" + std::to_string(pt.t), pt.estimate, bound,
        "L2 gap of played profile through six loops, R=100"));
  }
  return report;
}

Report lowerbound_suite(std::uint64_t seed, int threads) {
  Report report;
  report.suite = "lowerbound";
  std::uint64_t seed0 = seed ? seed : 1601;
  (void)threads;

  // observation law identity on the perturbed family
  double worst_law = 0.0;
  double worst_pinsker = 0.0;
  for (int ie = 0; ie < 100; ++ie) {
    double eps = -1.0 / 12.0 + (2.0 / 12.0) * ie / 99.0;
    MatrixGame g = hard_instance(eps);
    for (int id = 0; id < 100; ++id) {
      double delta = -0.5 + 1.0 * id / 99.0;
      Policy nu(std::vector<double>{0.5 + delta, 0.5 - delta});
      auto law = reward_vector_law(eps, delta);
      std::vector<double> rows;
      loss_to_rows(g, nu, rows);
      worst_law = std::max(worst_law, std::abs(law.first - rows[0]));
      worst_law = std::max(worst_law, std::abs(law.second - rows[1]));
      double base = 0.5 + delta / 3.0;
      double kl = bernoulli_kl(base, base - 2.0 * delta * eps);
      worst_pinsker =
          std::max(worst_pinsker, kl - 24.0 * eps * eps * delta * delta);
    }
  }
  report.checks.push_back(le_check("construction", "observation law matches game",
                                   worst_law, 1e-15, "100x100 (eps, delta) grid"));
  report.checks.push_back(le_check("construction",
                                   "per-round KL under quadratic envelope",
                                   worst_pinsker, 0.0, "100x100 (eps, delta) grid"));

  // realized budgets on generated traces
  MatrixGame base_game = hard_instance(0.0);
  const long T = 2000;
  const double eps_cases[] = {lower_bound_epsilon(T, 2.0), 1.0 / 12.0};
  const char* specs[] = {"regexp3:T=2000", "exp3ix", "eoe:p=2", "uniform"};
  double min_budget_slack = std::numeric_limits<double>::infinity();
  double uniform_budget = 0.0;
  std::uint64_t rep_counter = 0;
  for (const char* spec : specs) {
    for (long rep = 0; rep < 10; ++rep) {
      EpisodeOptions epi;
      epi.horizon = T;
      epi.seed = derive_seed(seed0, rep_counter++);
      EpisodeTrace trace = run_episode(base_game, spec, spec, epi);
      for (double eps : eps_cases) {
        KlBudget budget = kl_budget(trace, eps);
        min_budget_slack = std::min(min_budget_slack, budget.bound - budget.exact);
        if (std::string(spec) == "uniform")
          uniform_budget = std::max(uniform_budget, budget.exact);
      }
    }
  }
  report.checks.push_back(ge_check("budget", "realized KL under analytic budget",
                                   min_budget_slack, 0.0,
                                   "4 learner specs x 10 traces x 2 eps"));
  report.checks.push_back(le_check("budget", "static play leaks nothing",
                                   uniform_budget, 0.0, "delta stays 0"));

  // exploitability floor for the oblivious profile
  double eps_T = lower_bound_epsilon(10000, 2.0);
  Policy u2 = Policy::uniform(2);
  double worst_gap =
      std::max(exploitability_gap(hard_instance(eps_T), u2, u2),
               exploitability_gap(hard_instance(-eps_T), u2, u2));
  report.checks.push_back(ge_check("tension", "uniform play pays eps/2",
                                   worst_gap, eps_T / 2.0 - 1e-12,
                                   "worse of the two perturbed instances"));

  // end-to-end experiment report; only the budget inequality is a verdict
  LowerBoundReport lb = lower_bound_experiment("regexp3:T=2000", 2.0, T, 10,
                                               derive_seed(seed0, 9000));
  report.checks.push_back(ge_check("experiment", "mean budget under mean bound",
                                   lb.mean_bound - lb.mean_budget, 0.0,
                                   "worst-case final gap " + short_num(lb.eg_worst) +
                                       " at eps " + short_num(lb.epsilon)));
  return report;
}

Report properties_suite(std::uint64_t seed, int threads) {
  Report report;
  report.suite = "properties";
  std::uint64_t seed0 = seed ? seed : 1701;

  // learner policies stay normalized and strictly positive under load
  const char* specs[] = {"exp3ix", "regexp3:tau=0.3", "eoe:p=1", "doubling"};
  const int sizes[] = {3, 3, 2, 2};
  double worst_norm = 0.0;
  double min_prob = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    Rng rng(derive_seed(seed0, static_cast<std::uint64_t>(i)));
    double u = rng.uniform01();
    auto learner =
        make_learner(specs[i], Side::min_player, sizes[i], sizes[i], u);
    for (long step = 0; step < 250000; ++step) {
      const Policy& pi = learner->act();
      double sum = 0.0;
      for (int k = 0; k < pi.size(); ++k) {
        sum += pi[k];
        min_prob = std::min(min_prob, pi[k]);
      }
      worst_norm = std::max(worst_norm, std::abs(sum - 1.0));
      int a = rng.categorical(pi.probs());
      learner->observe(a, rng.uniform01());
    }
  }
  report.checks.push_back(le_check("policies", "normalization drift", worst_norm,
                                   1e-12, "1e6 act/observe steps over 4 learners"));
  report.checks.push_back(ge_check("policies", "strict positivity", min_prob,
                                   std::numeric_limits<double>::denorm_min(),
                                   "smallest played probability"));

  // gap function is 1-Lipschitz in the joint L1 distance
  Rng rng(derive_seed(seed0, 100));
  double worst_lip = -std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 100000; ++iter) {
    int A = rng.uniform_int(2, 5), B = rng.uniform_int(2, 5);
    MatrixGame g = random_game(rng, A, B);
    Profile w{random_full_support(rng, A), random_full_support(rng, B)};
    Profile v{random_full_support(rng, A), random_full_support(rng, B)};
    double lhs = std::abs(exploitability_gap(g, w) - exploitability_gap(g, v));
    worst_lip = std::max(worst_lip, lhs - profile_l1(w, v));
  }
  report.checks.push_back(le_check("gap", "1-Lipschitz slack", worst_lip, 1e-9,
                                   "1e5 random profile pairs"));

  // Pinsker on random policy pairs
  double worst_pinsker = -std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 10000; ++iter) {
    int K = rng.uniform_int(2, 6);
    Policy p = random_full_support(rng, K);
    Policy q = random_full_support(rng, K);
    double l1 = l1_distance(p, q);
    worst_pinsker = std::max(worst_pinsker, l1 * l1 / 2.0 - kl_divergence(p, q));
  }
  report.checks.push_back(le_check("divergence", "Pinsker slack", worst_pinsker,
                                   1e-12, "1e4 random policy pairs"));

  // geometric mixing keeps log-odds affine
  double worst_mix = 0.0;
  for (int iter = 0; iter < 10000; ++iter) {
    int K = rng.uniform_int(2, 5);
    Policy mirror = random_full_support(rng, K);
    Policy anchor = random_full_support(rng, K);
    double c = rng.uniform01();
    Policy mix = regexp3_mix(mirror, anchor, c);
    for (int a = 0; a < K; ++a)
      for (int b = 0; b < K; ++b) {
        double lhs = std::log(mix[a]) - std::log(mix[b]);
        double rhs = (1.0 - c) * (std::log(mirror[a]) - std::log(mirror[b])) +
                     c * (std::log(anchor[a]) - std::log(anchor[b]));
        worst_mix = std::max(worst_mix, std::abs(lhs - rhs));
      }
  }
  report.checks.push_back(le_check("mixing", "log-odds identity deviation",
                                   worst_mix, 1e-12, "1e4 random mixes"));

  // same master seed, any worker count, byte-identical results
  McOptions mc;
  mc.checkpoints = {10, 100, 1000, 2000};
  mc.reps = 12;
  mc.p = 2.0;
  mc.master_seed = derive_seed(seed0, 200);
  MatrixGame game = hard_instance(0.0);
  mc.threads = 1;
  std::string serial = format_curve_csv(monte_carlo_lp(game, "regexp3:T=2000",
                                                       "regexp3:T=2000", mc));
  std::string serial2 = format_curve_csv(monte_carlo_lp(game, "regexp3:T=2000",
                                                        "regexp3:T=2000", mc));
  mc.threads = threads > 1 ? threads : 4;
  std::string parallel = format_curve_csv(monte_carlo_lp(game, "regexp3:T=2000",
                                                         "regexp3:T=2000", mc));
  report.checks.push_back(le_check("reproducibility", "rerun differences",
                                   serial == serial2 ? 0.0 : 1.0, 0.0,
                                   "same seed, same worker count"));
  report.checks.push_back(le_check("reproducibility", "worker count differences",
                                   serial == parallel ? 0.0 : 1.0, 0.0,
                                   "1 worker vs " + std::to_string(mc.threads)));
  return report;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"oracles", "lemma2", "thm3", "thm2", "thm4", "lowerbound", "properties"};
}

Report verify_suite(const std::string& name, const VerifyOptions& options) {
  int threads = options.threads < 1 ? 1 : options.threads;
  if (name == "oracles") return oracles_suite(options.seed, threads);
  if (name == "lemma2") return lemma2_suite(options.seed, threads);
  if (name == "thm3") return thm3_suite(options.seed, threads);
  if (name == "thm2") return thm2_suite(options.seed, threads);
  if (name == "thm4") return thm4_suite(options.seed, threads);
  if (name == "lowerbound") return lowerbound_suite(options.seed, threads);
  if (name == "properties") return properties_suite(options.seed, threads);
  if (name == "all") {
    Report all;
    all.suite = "all";
    for (const std::string& n : verify_suite_names()) {
      Report r = verify_suite(n, options);
      all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
    }
    return all;
  }
  throw SuiteError("unknown verify suite '" + name + "'");
}

}  // namespace bg

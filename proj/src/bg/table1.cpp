#include "bg/table1.hpp"

#include <cstdio>

#include "bg/doubling.hpp"
#include "bg/matrix_game.hpp"
#include "bg/rng.hpp"

namespace bg {

namespace {

Table1Row make_row(const std::string& algorithm, double theoretical,
                   const RateCurve& curve, long t_min, long horizon, long reps) {
  RateFit fit = fit_rate(curve, t_min);
  Table1Row row;
  row.algorithm = algorithm;
  row.theoretical = theoretical;
  row.fitted = fit.slope;
  row.fit_se = fit.stderr_slope;
  row.horizon = horizon;
  row.reps = reps;
  return row;
}

}  // namespace

Table1Result table1(const Table1Options& options) {
  Table1Result result;
  MatrixGame game = hard_instance(0.0);
  const std::vector<long> cps = {10,   32,    100,   316,  1000,
                                 3162, 10000, 31623, 100000};
  std::uint64_t config = 0;

  for (double p : {0.5, 1.0, 2.0}) {
    McOptions mc;
    mc.checkpoints = cps;
    mc.reps = options.reps;
    mc.p = p;
    mc.master_seed = derive_seed(options.seed, config++);
    mc.threads = options.threads;
    std::string spec = "eoe:p=" + format_double(p);
    RateCurve curve = monte_carlo_lp(game, spec, spec, mc);
    // fit the last decade; the filter only reaches its asymptotic regime
    // once the inner learner has seen enough explore rounds
    result.rows.push_back(make_row("explore-exploit filter, p=" + format_double(p),
                                   -1.0 / (2.0 + p), curve, 10000, 100000,
                                   options.reps));
    result.curves.push_back({"filter p=" + format_double(p), curve});
  }

  {
    // fixed-horizon learner: one point per horizon, gap of the final profile
    RateCurve sweep;
    sweep.p = 2.0;
    for (long T : {1000L, 3162L, 10000L, 31623L, 100000L}) {
      McOptions mc;
      mc.checkpoints = {T};
      mc.reps = options.reps;
      mc.p = 2.0;
      mc.master_seed = derive_seed(options.seed, config++);
      mc.threads = options.threads;
      std::string spec = "regexp3:T=" + std::to_string(T);
      RateCurve curve = monte_carlo_lp(game, spec, spec, mc);
      sweep.points.push_back(curve.points[0]);
    }
    result.rows.push_back(make_row("anchored mirror descent, horizon sweep",
                                   -0.25, sweep, 1, 100000, options.reps));
    result.curves.push_back({"anchored, final point per horizon", sweep});
  }

  {
    long total = 0;
    for (int i = 1; i <= 6; ++i) total += doubling_schedule(i).T;
    McOptions mc;
    mc.checkpoints = geometric_checkpoints(32, total, 20);
    mc.reps = options.reps;
    mc.p = 2.0;
    mc.master_seed = derive_seed(options.seed, config++);
    mc.threads = options.threads;
    RateCurve curve = monte_carlo_lp(game, "doubling", "doubling", mc);
    result.rows.push_back(
        make_row("doubling wrapper", -0.25, curve, 100, total, options.reps));
    result.curves.push_back({"doubling wrapper", curve});
  }

  {
    McOptions mc;
    mc.checkpoints = cps;
    mc.reps = options.reps;
    mc.p = 2.0;
    mc.master_seed = derive_seed(options.seed, config++);
    mc.threads = options.threads;
    mc.source = CurveSource::output_eg;
    RateCurve curve = monte_carlo_lp(game, "exp3ix", "exp3ix", mc);
    result.rows.push_back(make_row("implicit-exploration baseline, avg output",
                                   -0.5, curve, 1000, 100000, options.reps));
    result.curves.push_back({"baseline averaged output", curve});
  }
  return result;
}

std::string format_table1(const std::vector<Table1Row>& rows) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-44s %8s %9s %8s %8s %5s\n", "algorithm",
                "theory", "fitted", "se", "horizon", "reps");
  out += buf;
  for (const Table1Row& r : rows) {
    std::snprintf(buf, sizeof buf, "%-44s %8.3f %9.3f %8.3f %8ld %5ld\n",
                  r.algorithm.c_str(), r.theoretical, r.fitted, r.fit_se,
                  r.horizon, r.reps);
    out += buf;
  }
  return out;
}

}  // namespace bg

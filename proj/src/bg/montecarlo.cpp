#include "bg/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "bg/rng.hpp"

namespace bg {

RateCurve monte_carlo_lp(const MatrixGame& game, const std::string& min_spec,
                         const std::string& max_spec, const McOptions& options) {
  if (options.reps < 1) throw DomainError("monte carlo: reps must be >= 1");
  if (!(options.p > 0.0)) throw DomainError("monte carlo: p must be positive");
  if (options.threads < 1) throw DomainError("monte carlo: threads must be >= 1");
  const std::size_t C = options.checkpoints.size();
  if (C == 0) throw DomainError("monte carlo: need at least one checkpoint");

  Profile star{Policy::uniform(1), Policy::uniform(1)};
  EpisodeOptions epi;
  epi.deterministic_loss = options.deterministic_loss;
  if (options.source == CurveSource::kl_star || options.diag_tau > 0.0) {
    if (!(options.diag_tau > 0.0))
      throw DiagnosticError("monte carlo: kl_star source needs diag_tau > 0");
    star = regularized_equilibrium(RegularizedGame(game, options.diag_tau), 1e-11);
    epi.reg_star = &star;
  }

  const long R = options.reps;
  std::vector<double> slots(static_cast<std::size_t>(R) * C);

  auto run_rep = [&](long rep) {
    EpisodeOptions local = epi;
    local.seed = derive_seed(options.master_seed, static_cast<std::uint64_t>(rep));
    std::vector<double> vals = run_checkpoints(game, min_spec, max_spec, local,
                                               options.checkpoints, options.source);
    for (std::size_t c = 0; c < C; ++c)
      slots[static_cast<std::size_t>(rep) * C + c] = vals[c];
  };

  int workers = static_cast<int>(std::min<long>(options.threads, R));
  if (workers <= 1) {
    for (long rep = 0; rep < R; ++rep) run_rep(rep);
  } else {
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
      for (;;) {
        long rep = next.fetch_add(1);
        if (rep >= R) return;
        try {
          run_rep(rep);
        } catch (...) {
          std::lock_guard<std::mutex> hold(failure_lock);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  RateCurve curve;
  curve.source = options.source;
  curve.p = options.p;
  curve.points.reserve(C);
  for (std::size_t c = 0; c < C; ++c) {
    double mean_pow = 0.0;
    for (long rep = 0; rep < R; ++rep)
      mean_pow += std::pow(slots[static_cast<std::size_t>(rep) * C + c], options.p);
    mean_pow /= static_cast<double>(R);
    double est = std::pow(mean_pow, 1.0 / options.p);
    double se = 0.0;
    if (R > 1 && mean_pow > 0.0) {
      double var = 0.0;
      for (long rep = 0; rep < R; ++rep) {
        double d = std::pow(slots[static_cast<std::size_t>(rep) * C + c], options.p) -
                   mean_pow;
        var += d * d;
      }
      var /= static_cast<double>(R - 1);
      double se_mean = std::sqrt(var / static_cast<double>(R));
      se = (1.0 / options.p) * std::pow(mean_pow, 1.0 / options.p - 1.0) * se_mean;
    }
    curve.points.push_back(CurvePoint{options.checkpoints[c], est, se, R});
  }
  return curve;
}

RateFit fit_rate(const RateCurve& curve, long t_min) {
  std::vector<double> xs, ys;
  for (const CurvePoint& pt : curve.points) {
    if (pt.t >= t_min && pt.estimate > 0.0) {
      xs.push_back(std::log(static_cast<double>(pt.t)));
      ys.push_back(std::log(pt.estimate));
    }
  }
  std::size_t n = xs.size();
  if (n < 3)
    throw DiagnosticError("rate fit: need at least three usable points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0.0) throw DiagnosticError("rate fit: degenerate abscissae");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points_used = static_cast<int>(n);
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  fit.stderr_slope =
      n > 2 ? std::sqrt(rss / static_cast<double>(n - 2) / sxx) : 0.0;
  return fit;
}

std::vector<long> geometric_checkpoints(long first, long last, int count) {
  if (first < 1 || last < first)
    throw DomainError("checkpoints: need 1 <= first <= last");
  if (count < 1) throw DomainError("checkpoints: count must be >= 1");
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1 || first == last) {
    out.push_back(first);
    if (last != first) out.push_back(last);
    return out;
  }
  double lf = std::log(static_cast<double>(first));
  double ll = std::log(static_cast<double>(last));
  for (int i = 0; i < count; ++i) {
    double x = lf + (ll - lf) * static_cast<double>(i) /
                        static_cast<double>(count - 1);
    long t = std::lround(std::exp(x));
    if (t < first) t = first;
    if (t > last) t = last;
    if (out.empty() || t > out.back()) out.push_back(t);
  }
  return out;
}

}  // namespace bg

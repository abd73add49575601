#include "bg/episode.hpp"

#include <cmath>

#include "bg/divergence.hpp"
#include "bg/regexp3.hpp"
#include "bg/rng.hpp"

namespace bg {

namespace {

// KL from a fixed profile half to a learner's mirror iterate, straight from
// the log-space state when available so tiny probabilities stay finite
double kl_to_mirror(const Policy& star, const Learner& learner) {
  if (const auto* rx = dynamic_cast<const RegExp3*>(&learner)) {
    const std::vector<double>& lm = rx->mirror_logits();
    double kl = 0.0;
    for (int i = 0; i < star.size(); ++i) {
      double p = star[i];
      if (p > 0.0) kl += p * (std::log(p) - lm[static_cast<std::size_t>(i)]);
    }
    return std::max(0.0, kl);
  }
  const Policy* m = learner.mirror_policy();
  if (!m)
    throw DiagnosticError("kl diagnostic: learner exposes no mirror iterate");
  return kl_divergence(star, *m);
}

struct Session {
  Session(const MatrixGame& game, const std::string& min_spec,
          const std::string& max_spec, const EpisodeOptions& options)
      : g(game), rng(options.seed), u(rng.uniform01()) {
    if (options.horizon < 1)
      throw DomainError("episode: horizon must be >= 1");
    if (options.reg_star &&
        (options.reg_star->mu.size() != game.rows() ||
         options.reg_star->nu.size() != game.cols()))
      throw DimensionError("episode: reg_star does not match game");
    lmin = make_learner(min_spec, Side::min_player, game.rows(), game.cols(), u);
    lmax = make_learner(max_spec, Side::max_player, game.cols(), game.rows(), u);
    deterministic = options.deterministic_loss;
  }

  // plays round t and reports the sampled actions and loss; pre_observe is
  // called between act and observe
  template <typename PreObserve>
  void round(PreObserve&& pre_observe, int& a, int& b, double& loss) {
    const Policy& mu = lmin->act();
    const Policy& nu = lmax->act();
    pre_observe(mu, nu);
    a = rng.categorical(mu.probs());
    b = rng.categorical(nu.probs());
    double mean = g.at(a, b);
    loss = deterministic ? mean : (rng.bernoulli(mean) ? 1.0 : 0.0);
    lmin->observe(a, loss);
    lmax->observe(b, loss);
  }

  const MatrixGame& g;
  Rng rng;
  double u;
  std::unique_ptr<Learner> lmin;
  std::unique_ptr<Learner> lmax;
  bool deterministic = false;
};

}  // namespace

EpisodeTrace run_episode(const MatrixGame& game, const std::string& min_spec,
                         const std::string& max_spec,
                         const EpisodeOptions& options) {
  Session s(game, min_spec, max_spec, options);
  EpisodeTrace trace;
  trace.rows_actions = game.rows();
  trace.cols_actions = game.cols();
  trace.u = s.u;
  trace.rows.reserve(static_cast<std::size_t>(options.horizon));
  bool two_cols = game.cols() == 2;
  for (long t = 1; t <= options.horizon; ++t) {
    TraceRow row;
    row.t = t;
    s.round(
        [&](const Policy& mu, const Policy& nu) {
          row.eg = exploitability_gap(game, mu, nu);
          if (two_cols) {
            row.delta = nu[0] - 0.5;
            row.has_delta = true;
          }
          if (options.reg_star) {
            row.kl_star = kl_to_mirror(options.reg_star->mu, *s.lmin) +
                          kl_to_mirror(options.reg_star->nu, *s.lmax);
            row.has_kl_star = true;
          }
        },
        row.a, row.b, row.loss);
    if (options.record_output_eg) {
      row.output_eg =
          exploitability_gap(game, s.lmin->output(), s.lmax->output());
      row.has_output_eg = true;
    }
    trace.rows.push_back(row);
  }
  trace.guard_hits_min = s.lmin->guard_hits();
  trace.guard_hits_max = s.lmax->guard_hits();
  trace.final_output = Profile{s.lmin->output(), s.lmax->output()};
  return trace;
}

CurveSource parse_curve_source(const std::string& name) {
  if (name == "played_eg") return CurveSource::played_eg;
  if (name == "output_eg") return CurveSource::output_eg;
  if (name == "kl_star") return CurveSource::kl_star;
  throw ParseError("unknown curve source '" + name + "'");
}

std::string curve_source_name(CurveSource source) {
  switch (source) {
    case CurveSource::played_eg: return "played_eg";
    case CurveSource::output_eg: return "output_eg";
    case CurveSource::kl_star: return "kl_star";
  }
  throw DomainError("unknown curve source");
}

std::vector<double> run_checkpoints(const MatrixGame& game,
                                    const std::string& min_spec,
                                    const std::string& max_spec,
                                    const EpisodeOptions& options,
                                    const std::vector<long>& checkpoints,
                                    CurveSource source) {
  if (checkpoints.empty())
    throw DomainError("checkpoints: need at least one");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1)
      throw DomainError("checkpoints: rounds must be >= 1");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw DomainError("checkpoints: rounds must be strictly increasing");
  }
  if (source == CurveSource::kl_star && !options.reg_star)
    throw DiagnosticError("kl diagnostic: no regularized fixed point supplied");

  Session s(game, min_spec, max_spec, options);
  std::vector<double> values;
  values.reserve(checkpoints.size());
  long horizon = checkpoints.back();
  std::size_t next = 0;
  for (long t = 1; t <= horizon; ++t) {
    bool at_cp = checkpoints[next] == t;
    int a = 0, b = 0;
    double loss = 0.0;
    s.round(
        [&](const Policy& mu, const Policy& nu) {
          if (!at_cp) return;
          if (source == CurveSource::played_eg)
            values.push_back(exploitability_gap(game, mu, nu));
          else if (source == CurveSource::kl_star)
            values.push_back(kl_to_mirror(options.reg_star->mu, *s.lmin) +
                             kl_to_mirror(options.reg_star->nu, *s.lmax));
        },
        a, b, loss);
    if (at_cp) {
      if (source == CurveSource::output_eg)
        values.push_back(
            exploitability_gap(game, s.lmin->output(), s.lmax->output()));
      ++next;
    }
  }
  return values;
}

}  // namespace bg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bg/equilibrium.hpp"
#include "bg/learner.hpp"
#include "bg/matrix_game.hpp"

namespace bg {

struct EpisodeOptions {
  long horizon = 1000;
  std::uint64_t seed = 0;
  bool deterministic_loss = false;
  bool record_output_eg = false;
  // strictly positive regularized fixed point; enables the kl_star column
  const Profile* reg_star = nullptr;
};

struct TraceRow {
  long t = 0;
  double eg = 0.0;
  double delta = 0.0;      // max player's first-action weight minus 1/2 (2-column games)
  double kl_star = 0.0;    // joint KL from reg_star to the mirror iterates
  int a = 0;
  int b = 0;
  double loss = 0.0;
  double output_eg = 0.0;
  bool has_delta = false;
  bool has_kl_star = false;
  bool has_output_eg = false;
};

struct EpisodeTrace {
  int rows_actions = 0;
  int cols_actions = 0;
  double u = 0.0;
  std::vector<TraceRow> rows;
  long guard_hits_min = 0;
  long guard_hits_max = 0;
  Profile final_output{Policy::uniform(1), Policy::uniform(1)};
};

// Plays min_spec vs max_spec on the game for options.horizon rounds and
// records one row per round. Both learners receive the same shared offset u,
// drawn first from the episode RNG.
EpisodeTrace run_episode(const MatrixGame& game, const std::string& min_spec,
                         const std::string& max_spec,
                         const EpisodeOptions& options);

enum class CurveSource { played_eg, output_eg, kl_star };

CurveSource parse_curve_source(const std::string& name);
std::string curve_source_name(CurveSource source);

// Same episode loop, but only evaluates the requested quantity at the given
// ascending checkpoint rounds. Returns one value per checkpoint.
std::vector<double> run_checkpoints(const MatrixGame& game,
                                    const std::string& min_spec,
                                    const std::string& max_spec,
                                    const EpisodeOptions& options,
                                    const std::vector<long>& checkpoints,
                                    CurveSource source);

}  // namespace bg

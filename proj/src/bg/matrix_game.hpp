#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bg/policy.hpp"

namespace bg {

enum class LossMode { bernoulli, deterministic };

// Two-player zero-sum matrix game. The row (min) player picks a, the column
// (max) player picks b; the round loss has mean L(a,b) in [0,1] and is paid
// by the min player to the max player. bernoulli mode draws the loss from
// B(L(a,b)); deterministic mode returns L(a,b) itself.
class MatrixGame {
 public:
  MatrixGame(int rows, int cols, std::vector<double> row_major, LossMode mode);

  int rows() const { return a_; }
  int cols() const { return b_; }
  LossMode mode() const { return mode_; }
  double at(int a, int b) const {
    if (a < 0 || a >= a_ || b < 0 || b >= b_)
      throw DimensionError("game: action index out of range");
    return l_[static_cast<std::size_t>(a) * static_cast<std::size_t>(b_) +
              static_cast<std::size_t>(b)];
  }
  const std::vector<double>& data() const { return l_; }

 private:
  int a_;
  int b_;
  LossMode mode_;
  std::vector<double> l_;
};

double expected_loss(const MatrixGame& g, const Policy& mu, const Policy& nu);

// per-action losses (L nu)(a) for the rows, (mu^T L)(b) for the columns
void loss_to_rows(const MatrixGame& g, const Policy& nu,
                  std::vector<double>& out);
void loss_to_cols(const MatrixGame& g, const Policy& mu,
                  std::vector<double>& out);

// -min_a (L nu)(a) + max_b (mu^T L)(b); zero exactly at equilibria, and
// pure best responses make the evaluation exact
double exploitability_gap(const MatrixGame& g, const Policy& mu,
                          const Policy& nu);
double exploitability_gap(const MatrixGame& g, const Profile& w);

// 2x2 family [[2/3-eps, 1/3+eps], [1/3, 2/3]] with eps in [-1/12, 1/12];
// the second player's equilibrium is (1/2, 1/2) and the value is 1/2 for
// every eps
MatrixGame hard_instance(double epsilon);

// mean losses seen by the row player of hard_instance(epsilon) when the
// column player mixes (1/2+delta, 1/2-delta); both lie in [1/6, 5/6]
std::pair<double, double> reward_vector_law(double epsilon, double delta);

// text format: "A B loss_mode" header then A rows of B reals
MatrixGame parse_game(const std::string& text);
std::string format_game(const MatrixGame& g);

// path to a game file, or a "hard:<epsilon>" token
MatrixGame load_game(const std::string& path_or_token);
void save_game(const MatrixGame& g, const std::string& path);

}  // namespace bg

#include "bg/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace bg {

MatrixGame::MatrixGame(int rows, int cols, std::vector<double> row_major,
                       LossMode mode)
    : a_(rows), b_(cols), mode_(mode), l_(std::move(row_major)) {
  if (rows < 1 || cols < 1) throw DimensionError("game: empty action set");
  if (l_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw DimensionError("game: entry count does not match dimensions");
  for (double v : l_) {
    if (!(v >= 0.0 && v <= 1.0))
      throw DomainError("game: entries must lie in [0, 1]");
  }
}

double expected_loss(const MatrixGame& g, const Policy& mu, const Policy& nu) {
  if (mu.size() != g.rows() || nu.size() != g.cols())
    throw DimensionError("expected_loss: profile does not match game");
  double total = 0.0;
  for (int a = 0; a < g.rows(); ++a) {
    double row = 0.0;
    for (int b = 0; b < g.cols(); ++b) row += g.at(a, b) * nu[b];
    total += mu[a] * row;
  }
  return total;
}

void loss_to_rows(const MatrixGame& g, const Policy& nu,
                  std::vector<double>& out) {
  if (nu.size() != g.cols()) throw DimensionError("loss_to_rows: size mismatch");
  out.assign(static_cast<std::size_t>(g.rows()), 0.0);
  for (int a = 0; a < g.rows(); ++a) {
    double s = 0.0;
    for (int b = 0; b < g.cols(); ++b) s += g.at(a, b) * nu[b];
    out[static_cast<std::size_t>(a)] = s;
  }
}

void loss_to_cols(const MatrixGame& g, const Policy& mu,
                  std::vector<double>& out) {
  if (mu.size() != g.rows()) throw DimensionError("loss_to_cols: size mismatch");
  out.assign(static_cast<std::size_t>(g.cols()), 0.0);
  for (int b = 0; b < g.cols(); ++b) {
    double s = 0.0;
    for (int a = 0; a < g.rows(); ++a) s += g.at(a, b) * mu[a];
    out[static_cast<std::size_t>(b)] = s;
  }
}

double exploitability_gap(const MatrixGame& g, const Policy& mu,
                          const Policy& nu) {
  if (mu.size() != g.rows() || nu.size() != g.cols())
    throw DimensionError("exploitability_gap: profile does not match game");
  double best_row = std::numeric_limits<double>::infinity();
  for (int a = 0; a < g.rows(); ++a) {
    double s = 0.0;
    for (int b = 0; b < g.cols(); ++b) s += g.at(a, b) * nu[b];
    best_row = std::min(best_row, s);
  }
  double best_col = -std::numeric_limits<double>::infinity();
  for (int b = 0; b < g.cols(); ++b) {
    double s = 0.0;
    for (int a = 0; a < g.rows(); ++a) s += g.at(a, b) * mu[a];
    best_col = std::max(best_col, s);
  }
  // nonnegative in exact arithmetic; clamp rounding residue
  return std::max(0.0, best_col - best_row);
}

double exploitability_gap(const MatrixGame& g, const Profile& w) {
  return exploitability_gap(g, w.mu, w.nu);
}

MatrixGame hard_instance(double epsilon) {
  constexpr double kMax = 1.0 / 12.0;
  if (!(epsilon >= -kMax && epsilon <= kMax))
    throw DomainError("hard_instance: epsilon outside [-1/12, 1/12]");
  std::vector<double> l = {2.0 / 3.0 - epsilon, 1.0 / 3.0 + epsilon,
                           1.0 / 3.0, 2.0 / 3.0};
  return MatrixGame(2, 2, std::move(l), LossMode::bernoulli);
}

std::pair<double, double> reward_vector_law(double epsilon, double delta) {
  constexpr double kMax = 1.0 / 12.0;
  if (!(epsilon >= -kMax && epsilon <= kMax))
    throw DomainError("reward_vector_law: epsilon outside [-1/12, 1/12]");
  if (!(delta >= -0.5 && delta <= 0.5))
    throw DomainError("reward_vector_law: delta outside [-1/2, 1/2]");
  double first = 0.5 + delta / 3.0 - 2.0 * delta * epsilon;
  double second = 0.5 - delta / 3.0;
  return {first, second};
}

namespace {

std::string mode_name(LossMode m) {
  return m == LossMode::bernoulli ? "bernoulli" : "deterministic";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

MatrixGame parse_game(const std::string& text) {
  std::istringstream in(text);
  int rows = 0, cols = 0;
  std::string mode_tok;
  if (!(in >> rows >> cols >> mode_tok))
    throw ParseError("game: malformed header, expected 'A B loss_mode'");
  LossMode mode;
  if (mode_tok == "bernoulli")
    mode = LossMode::bernoulli;
  else if (mode_tok == "deterministic")
    mode = LossMode::deterministic;
  else
    throw ParseError("game: unknown loss mode '" + mode_tok + "'");
  if (rows < 1 || cols < 1) throw ParseError("game: nonpositive dimensions");
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  double v = 0.0;
  while (entries.size() <
             static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) &&
         (in >> v))
    entries.push_back(v);
  if (entries.size() !=
      static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw ParseError("game: expected " + std::to_string(rows * cols) +
                     " entries");
  std::string tail;
  if (in >> tail) throw ParseError("game: trailing content '" + tail + "'");
  // well formed but out of range stays a domain violation
  return MatrixGame(rows, cols, std::move(entries), mode);
}

std::string format_game(const MatrixGame& g) {
  std::string out = std::to_string(g.rows()) + " " + std::to_string(g.cols()) +
                    " " + mode_name(g.mode()) + "\n";
  for (int a = 0; a < g.rows(); ++a) {
    for (int b = 0; b < g.cols(); ++b) {
      if (b) out += " ";
      out += format_double(g.at(a, b));
    }
    out += "\n";
  }
  return out;
}

MatrixGame load_game(const std::string& path_or_token) {
  const std::string prefix = "hard:";
  if (path_or_token.rfind(prefix, 0) == 0) {
    const std::string num = path_or_token.substr(prefix.size());
    std::size_t used = 0;
    double eps = 0.0;
    try {
      eps = std::stod(num, &used);
    } catch (const std::exception&) {
      throw ParseError("game: bad epsilon in '" + path_or_token + "'");
    }
    if (used != num.size())
      throw ParseError("game: bad epsilon in '" + path_or_token + "'");
    return hard_instance(eps);
  }
  std::ifstream in(path_or_token);
  if (!in) throw IoError("game: cannot open '" + path_or_token + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

void save_game(const MatrixGame& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("game: cannot write '" + path + "'");
  out << format_game(g);
  if (!out) throw IoError("game: write failed for '" + path + "'");
}

}  // namespace bg

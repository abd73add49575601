#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bg/csv.hpp"
#include "bg/montecarlo.hpp"

namespace bg {

struct Table1Row {
  std::string algorithm;
  double theoretical = 0.0;
  double fitted = 0.0;
  double fit_se = 0.0;
  long horizon = 0;
  long reps = 0;
};

struct Table1Options {
  std::uint64_t seed = 7;
  long reps = 40;
  int threads = 1;
};

struct Table1Result {
  std::vector<Table1Row> rows;
  std::vector<LabeledCurve> curves;
};

// empirical convergence-rate table on the unperturbed 2x2 instance
Table1Result table1(const Table1Options& options = {});

std::string format_table1(const std::vector<Table1Row>& rows);

}  // namespace bg

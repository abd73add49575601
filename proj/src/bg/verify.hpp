#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bg {

struct Check {
  std::string group;
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // nonnegative iff the check passes
  bool pass = false;
  std::string note;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  bool ok() const;
  std::vector<std::string> lines() const;  // one formatted line per check
};

struct VerifyOptions {
  std::uint64_t seed = 0;  // 0 keeps the suite's pinned default
  int threads = 1;
};

// suites: oracles, lemma2, thm3, thm2, thm4, lowerbound, properties, all
Report verify_suite(const std::string& name, const VerifyOptions& options = {});

std::vector<std::string> verify_suite_names();

}  // namespace bg

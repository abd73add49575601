// Acceptance gate: one line per criterion, exit code = number of failures.
// Each criterion delegates to an empirical check suite with pinned seeds and
// tolerances; see src/bg/verify.cpp for the bounds being enforced.

#include <cstdio>
#include <string>
#include <vector>

#include "bg/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string text;
  bool pass;
  std::vector<std::string> failures;
};

bool group_ok(const bg::Report& report, const std::string& group,
              std::vector<std::string>* failures) {
  bool ok = true;
  for (const bg::Check& c : report.checks) {
    if (c.group != group) continue;
    if (!c.pass) {
      ok = false;
      if (failures) failures->push_back(bg::Report{report.suite, {c}}.lines()[0]);
    }
  }
  return ok;
}

bool suite_ok(const bg::Report& report, std::vector<std::string>* failures) {
  for (const bg::Check& c : report.checks)
    if (!c.pass && failures)
      failures->push_back(bg::Report{report.suite, {c}}.lines()[0]);
  return report.ok();
}

}  // namespace

int main() {
  bg::VerifyOptions options;  // seed 0 keeps every suite's pinned default
  options.threads = 1;

  std::printf("acceptance: running empirical check suites (pinned seeds)\n");
  std::fflush(stdout);

  bg::Report oracles = bg::verify_suite("oracles", options);
  bg::Report lemma2 = bg::verify_suite("lemma2", options);
  bg::Report thm3 = bg::verify_suite("thm3", options);
  bg::Report thm2 = bg::verify_suite("thm2", options);
  bg::Report thm4 = bg::verify_suite("thm4", options);
  bg::Report lowerbound = bg::verify_suite("lowerbound", options);
  bg::Report properties = bg::verify_suite("properties", options);

  std::vector<Criterion> criteria;
  {
    Criterion c{1,
                "one-hot importance-weighted loss estimates are unbiased "
                "(suite oracles/unbiasedness)",
                true,
                {}};
    c.pass = group_ok(oracles, "unbiasedness", &c.failures);
    criteria.push_back(c);
  }
  {
    Criterion c{2,
                "implicit-exploration estimates keep a bounded second moment "
                "(suite oracles/second-order)",
                true,
                {}};
    c.pass = group_ok(oracles, "second-order", &c.failures);
    criteria.push_back(c);
  }
  {
    Criterion c{3,
                "the shared-offset coin scheduler lands on floor or ceiling "
                "of the target mass (suite oracles/scheduler)",
                true,
                {}};
    c.pass = group_ok(oracles, "scheduler", &c.failures);
    criteria.push_back(c);
  }
  {
    Criterion c{4,
                "anchored mirror descent contracts the divergence to the "
                "regularized saddle point at rate 1/t (suite lemma2)",
                true,
                {}};
    c.pass = suite_ok(lemma2, &c.failures);
    criteria.push_back(c);
  }
  {
    Criterion c{5,
                "horizon-tuned anchored mirror descent keeps its last-iterate "
                "gap under the T^(-1/4) budget (suite thm3)",
                true,
                {}};
    c.pass = suite_ok(thm3, &c.failures);
    criteria.push_back(c);
  }
  {
    Criterion c{6,
                "the exploration filter turns averaged guarantees into "
                "last-iterate L^p decay at rate t^(-1/(2+p)) (suite thm2)",
                true,
                {}};
    c.pass = suite_ok(thm2, &c.failures);
    criteria.push_back(c);
  }
  {
    Criterion c{7,
                "the doubling wrapper meets the anytime t^(-1/4) bound with "
                "no horizon knowledge (suite thm4)",
                true,
                {}};
    c.pass = suite_ok(thm4, &c.failures);
    criteria.push_back(c);
  }
  {
    Criterion c{8,
                "the perturbed instance pair enforces the information floor: "
                "low divergence budgets cannot beat the eps/2 gap (suite "
                "lowerbound)",
                true,
                {}};
    c.pass = suite_ok(lowerbound, &c.failures);
    criteria.push_back(c);
  }
  {
    Criterion c{9,
                "episodes are thread-count invariant and reproducible, and "
                "every policy stays normalized and strictly positive (suite "
                "properties)",
                true,
                {}};
    c.pass = suite_ok(properties, &c.failures);
    criteria.push_back(c);
  }

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::printf("[%s] criterion %d: %s\n", c.pass ? "pass" : "FAIL", c.number,
                c.text.c_str());
    for (const std::string& line : c.failures)
      std::printf("        %s\n", line.c_str());
    if (!c.pass) ++failed;
  }
  std::printf("acceptance: %d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}

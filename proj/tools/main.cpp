#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "banditgames.h"

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

void check(bg_status status) {
  if (status != BG_OK)
    fail(2, std::string(bg_status_name(status)) + ": " + bg_last_error());
}

using GamePtr = std::unique_ptr<bg_game, void (*)(bg_game*)>;
using TracePtr = std::unique_ptr<bg_trace, void (*)(bg_trace*)>;
using CurvePtr = std::unique_ptr<bg_curve, void (*)(bg_curve*)>;
using ReportPtr = std::unique_ptr<bg_report, void (*)(bg_report*)>;
using TablePtr = std::unique_ptr<bg_table1, void (*)(bg_table1*)>;

std::string take_string(char* owned) {
  std::string s = owned ? owned : "";
  bg_string_free(owned);
  return s;
}

// files written by the current invocation; removed unless commit() is called
struct OutputSet {
  std::vector<std::string> paths;
  bool committed = false;

  void add(const std::string& path) { paths.push_back(path); }
  void commit() { committed = true; }
  ~OutputSet() {
    if (committed) return;
    for (const std::string& p : paths) std::remove(p.c_str());
  }
};

struct Options {
  std::string config_path;
  std::string game = "hard:0";
  std::string min_algo;  // empty means the subcommand's default
  std::string max_algo;  // empty copies min_algo
  long horizon = 10000;
  long reps = -1;        // -1 means the subcommand's default
  double p = 2.0;
  std::uint64_t seed = 0;
  std::string checkpoints = "geom";
  // config files split comma lists into tokens; joined back after parsing
  std::vector<std::string> checkpoint_tokens;
  std::string out;       // --out beats BANDITGAMES_OUT beats "."
  bool deterministic_loss = false;
  int threads = 1;
  std::string source = "played_eg";
  double diag_tau = 0.0;
  long traces = -1;      // -1 writes one trace when reps == 1
  bool svg = false;
  std::string suite = "all";
};

std::string resolve_out_dir(const Options& opt) {
  std::string dir = opt.out;
  if (dir.empty()) {
    const char* env = std::getenv("BANDITGAMES_OUT");
    dir = env && *env ? env : ".";
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(2, "cannot create output directory '" + dir + "'");
  return dir;
}

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

long parse_positive_long(const std::string& text, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 1)
    fail(2, std::string("bad ") + what + " '" + text + "'");
  return value;
}

// "geom", "geom:<ratio>", or an ascending comma list of rounds
std::vector<int64_t> parse_checkpoints(const std::string& spec, long horizon) {
  std::vector<int64_t> cps;
  if (spec.rfind("geom", 0) == 0) {
    double ratio = std::sqrt(10.0);
    if (spec.size() > 4) {
      if (spec[4] != ':') fail(2, "bad checkpoint spec '" + spec + "'");
      try {
        ratio = std::stod(spec.substr(5));
      } catch (const std::exception&) {
        ratio = 0.0;
      }
      if (!(ratio > 1.0)) fail(2, "checkpoint ratio must exceed 1");
    }
    int64_t first = horizon < 10 ? horizon : 10;
    int count = 1;
    if (horizon > first)
      count = static_cast<int>(std::llround(
                  std::log(static_cast<double>(horizon) / first) /
                  std::log(ratio))) +
              1;
    if (count < 2 && horizon > first) count = 2;
    std::vector<int64_t> buf(static_cast<std::size_t>(count) + 2);
    int32_t n = 0;
    check(bg_geometric_checkpoints(first, horizon, count, buf.data(), &n));
    buf.resize(static_cast<std::size_t>(n));
    if (buf.empty() || buf.back() != horizon) buf.push_back(horizon);
    return buf;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string field = spec.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (field.empty()) fail(2, "empty checkpoint field");
    cps.push_back(parse_positive_long(field, "checkpoint"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (std::size_t i = 1; i < cps.size(); ++i)
    if (cps[i] <= cps[i - 1]) fail(2, "checkpoints must be ascending");
  return cps;
}

int cmd_run(const Options& opt) {
  std::string out_dir = resolve_out_dir(opt);
  std::string min_algo = opt.min_algo.empty() ? "exp3ix" : opt.min_algo;
  std::string max_algo = opt.max_algo.empty() ? min_algo : opt.max_algo;
  long reps = opt.reps < 0 ? 1 : opt.reps;

  bg_game* game_raw = nullptr;
  check(bg_game_load(opt.game.c_str(), &game_raw));
  GamePtr game(game_raw, bg_game_free);

  std::vector<int64_t> cps = parse_checkpoints(opt.checkpoints, opt.horizon);
  int64_t horizon = cps.back();

  OutputSet outputs;
  bg_curve* curve_raw = nullptr;
  check(bg_monte_carlo(game.get(), min_algo.c_str(), max_algo.c_str(),
                       cps.data(), static_cast<int32_t>(cps.size()), reps,
                       opt.p, opt.seed, opt.threads,
                       opt.deterministic_loss ? 1 : 0, opt.source.c_str(),
                       opt.diag_tau, &curve_raw));
  CurvePtr curve(curve_raw, bg_curve_free);

  std::string curve_path = join(out_dir, "curve.csv");
  check(bg_curve_write_csv(curve.get(), curve_path.c_str()));
  outputs.add(curve_path);

  long n_traces = opt.traces >= 0 ? opt.traces : (reps == 1 ? 1 : 0);
  if (n_traces > reps) n_traces = reps;
  for (long rep = 0; rep < n_traces; ++rep) {
    bg_trace* trace_raw = nullptr;
    check(bg_episode_run(game.get(), min_algo.c_str(), max_algo.c_str(),
                         horizon, bg_derive_seed(opt.seed, static_cast<std::uint64_t>(rep)),
                         opt.deterministic_loss ? 1 : 0,
                         opt.source == "output_eg" ? 1 : 0, opt.diag_tau,
                         &trace_raw));
    TracePtr trace(trace_raw, bg_trace_free);
    std::string trace_path =
        join(out_dir, "trace_" + std::to_string(rep) + ".csv");
    check(bg_trace_write_csv(trace.get(), trace_path.c_str()));
    outputs.add(trace_path);
  }

  if (opt.svg) {
    std::string label = min_algo + " vs " + max_algo;
    const bg_curve* curves[] = {curve.get()};
    const char* labels[] = {label.c_str()};
    char* text = nullptr;
    check(bg_curves_svg(curves, labels, 1, opt.game.c_str(), &text));
    std::string svg = take_string(text);
    std::string svg_path = join(out_dir, "curve.svg");
    FILE* f = std::fopen(svg_path.c_str(), "wb");
    if (!f) fail(2, "cannot write '" + svg_path + "'");
    std::fwrite(svg.data(), 1, svg.size(), f);
    std::fclose(f);
    outputs.add(svg_path);
  }

  std::printf("game %s, %s vs %s, R=%ld, p=%g, seed=%llu\n", opt.game.c_str(),
              min_algo.c_str(), max_algo.c_str(), reps, opt.p,
              static_cast<unsigned long long>(opt.seed));
  int n_points = bg_curve_points(curve.get());
  for (int i = 0; i < n_points; ++i) {
    int64_t t = 0, r = 0;
    double est = 0.0, se = 0.0;
    check(bg_curve_point(curve.get(), i, &t, &est, &se, &r));
    std::printf("  t=%-8lld %s=%.6g  se=%.3g\n", static_cast<long long>(t),
                opt.source.c_str(), est, se);
  }
  double slope = 0.0, se = 0.0;
  int used = 0;
  if (bg_curve_fit(curve.get(), 1, &slope, nullptr, &se, &used) == BG_OK)
    std::printf("log-log slope %.4f (se %.4f, %d points)\n", slope, se, used);
  for (const std::string& p : outputs.paths)
    std::printf("wrote %s\n", p.c_str());
  outputs.commit();
  return 0;
}

int cmd_verify(const Options& opt, const std::string& suite_arg) {
  std::string suite = suite_arg.empty() ? opt.suite : suite_arg;
  bg_report* report_raw = nullptr;
  check(bg_verify_suite(suite.c_str(), opt.seed, opt.threads, &report_raw));
  ReportPtr report(report_raw, bg_report_free);
  int n = bg_report_checks(report.get());
  int failed = 0;
  for (int i = 0; i < n; ++i) {
    const char* line = bg_report_line(report.get(), i);
    std::printf("%s\n", line ? line : "");
    if (line && std::string(line).rfind("[FAIL]", 0) == 0) ++failed;
  }
  std::printf("%s: %d checks, %d failed\n", suite.c_str(), n, failed);
  return bg_report_ok(report.get()) ? 0 : 1;
}

int cmd_table1(const Options& opt) {
  std::string out_dir = resolve_out_dir(opt);
  long reps = opt.reps < 0 ? 40 : opt.reps;
  bg_table1* table_raw = nullptr;
  check(bg_table1_run(opt.seed == 0 ? 7 : opt.seed, reps, opt.threads,
                      &table_raw));
  TablePtr table(table_raw, bg_table1_free);

  char* text_raw = nullptr;
  check(bg_table1_text(table.get(), &text_raw));
  std::string text = take_string(text_raw);
  std::fputs(text.c_str(), stdout);

  OutputSet outputs;
  std::string table_path = join(out_dir, "table1.txt");
  FILE* f = std::fopen(table_path.c_str(), "wb");
  if (!f) fail(2, "cannot write '" + table_path + "'");
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
  outputs.add(table_path);

  if (opt.svg) {
    char* svg_raw = nullptr;
    check(bg_table1_svg(table.get(), "empirical convergence rates", &svg_raw));
    std::string svg = take_string(svg_raw);
    std::string svg_path = join(out_dir, "table1.svg");
    FILE* g = std::fopen(svg_path.c_str(), "wb");
    if (!g) fail(2, "cannot write '" + svg_path + "'");
    std::fwrite(svg.data(), 1, svg.size(), g);
    std::fclose(g);
    outputs.add(svg_path);
  }
  for (const std::string& p : outputs.paths)
    std::printf("wrote %s\n", p.c_str());
  outputs.commit();
  return 0;
}

int cmd_lowerbound(const Options& opt) {
  long reps = opt.reps < 0 ? 10 : opt.reps;
  std::string spec = opt.min_algo.empty()
                         ? "regexp3:T=" + std::to_string(opt.horizon)
                         : opt.min_algo;
  bg_lower_bound_report report{};
  check(bg_lower_bound_experiment(spec.c_str(), opt.p, opt.horizon, reps,
                                  opt.seed, &report));
  std::printf("self-play of %s, T=%lld, R=%lld, p=%g\n", spec.c_str(),
              static_cast<long long>(report.T),
              static_cast<long long>(report.reps), report.p);
  std::printf("perturbation scale eps = %.10g\n", report.epsilon);
  std::printf("final gap on +eps instance: %.6g (se %.3g)\n", report.eg_plus,
              report.se_plus);
  std::printf("final gap on -eps instance: %.6g (se %.3g)\n", report.eg_minus,
              report.se_minus);
  std::printf("worst of the two: %.6g; eps/2 floor for oblivious play: %.6g\n",
              report.eg_worst, report.epsilon / 2.0);
  std::printf("mean information budget %.6g within analytic cap %.6g\n",
              report.mean_budget, report.mean_bound);
  std::printf("note: the floor is asymptotic; this run is evidence, not a verdict\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bandit learning in zero-sum matrix games"};
  app.name("banditgames");
  Options opt;

  app.set_config("--config", "", "flat key=value configuration file");
  app.add_option("--game", opt.game,
                 "game file path or hard:<eps> for the built-in 2x2 family")
      ->capture_default_str();
  app.add_option("--min-algo", opt.min_algo,
                 "learner spec for the min player (run: exp3ix, lowerbound: "
                 "regexp3:T=<horizon>)");
  app.add_option("--max-algo", opt.max_algo,
                 "learner spec for the max player (defaults to --min-algo)");
  app.add_option("--horizon", opt.horizon, "rounds per episode")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--reps", opt.reps, "replications (default depends on command)");
  app.add_option("--p", opt.p, "norm exponent / filter exponent")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "master seed")->capture_default_str();
  app.add_option("--checkpoints", opt.checkpoint_tokens,
                 "geom, geom:<ratio>, or comma-separated rounds (default geom)")
      ->delimiter(',');
  app.add_option("--out", opt.out,
                 "output directory (else $BANDITGAMES_OUT, else .)");
  app.add_flag("--deterministic-loss", opt.deterministic_loss,
               "feed mean losses instead of coin flips");
  app.add_option("--threads", opt.threads, "worker threads for replications")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--source", opt.source,
                 "curve quantity: played_eg, output_eg, kl_star")
      ->capture_default_str();
  app.add_option("--diag-tau", opt.diag_tau,
                 "regularization strength for kl_star diagnostics");
  app.add_option("--traces", opt.traces,
                 "trace CSVs to write (default: one when reps is 1)");
  app.add_flag("--svg", opt.svg, "also emit a log-log SVG chart");
  app.add_option("--suite", opt.suite, "verify suite when none is given")
      ->capture_default_str();

  CLI::App* run = app.add_subcommand("run", "Monte Carlo rate curve");
  CLI::App* verify =
      app.add_subcommand("verify", "empirical checks with pass/fail verdicts");
  std::string suite_arg;
  verify->add_option("suite_name", suite_arg,
                     "oracles, lemma2, thm3, thm2, thm4, lowerbound, "
                     "properties, or all");
  CLI::App* table =
      app.add_subcommand("table1", "fitted convergence rates per algorithm");
  CLI::App* lower = app.add_subcommand(
      "lowerbound", "perturbed-instance self-play and information budget");
  for (CLI::App* sub : {run, verify, table, lower}) sub->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!opt.checkpoint_tokens.empty()) {
    opt.checkpoints.clear();
    for (std::size_t i = 0; i < opt.checkpoint_tokens.size(); ++i) {
      if (i) opt.checkpoints += ',';
      opt.checkpoints += opt.checkpoint_tokens[i];
    }
  }

  try {
    if (run->parsed()) return cmd_run(opt);
    if (verify->parsed()) return cmd_verify(opt, suite_arg);
    if (table->parsed()) return cmd_table1(opt);
    return cmd_lowerbound(opt);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

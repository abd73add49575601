#pragma once

#include <string>
#include <vector>

#include "bg/episode.hpp"
#include "bg/montecarlo.hpp"

namespace bg {

// shortest round-trip decimal rendering (%.17g)
std::string format_double(double v);

// header t,eg,delta,kl_star,a,b,loss[,output_eg]; absent diagnostics stay empty
std::string format_trace_csv(const EpisodeTrace& trace);

// header t,lp_estimate,stderr,R
std::string format_curve_csv(const RateCurve& curve);
RateCurve parse_curve_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

struct LabeledCurve {
  std::string label;
  RateCurve curve;
};

// minimal self-contained log-log chart of one or more curves
std::string curves_svg(const std::vector<LabeledCurve>& curves,
                       const std::string& title);

}  // namespace bg

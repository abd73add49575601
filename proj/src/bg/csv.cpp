#include "bg/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bg {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_trace_csv(const EpisodeTrace& trace) {
  bool with_output = false;
  for (const TraceRow& row : trace.rows)
    if (row.has_output_eg) with_output = true;
  std::string out = "t,eg,delta,kl_star,a,b,loss";
  if (with_output) out += ",output_eg";
  out += '\n';
  for (const TraceRow& row : trace.rows) {
    out += std::to_string(row.t);
    out += ',';
    out += format_double(row.eg);
    out += ',';
    if (row.has_delta) out += format_double(row.delta);
    out += ',';
    if (row.has_kl_star) out += format_double(row.kl_star);
    out += ',';
    out += std::to_string(row.a);
    out += ',';
    out += std::to_string(row.b);
    out += ',';
    out += format_double(row.loss);
    if (with_output) {
      out += ',';
      if (row.has_output_eg) out += format_double(row.output_eg);
    }
    out += '\n';
  }
  return out;
}

std::string format_curve_csv(const RateCurve& curve) {
  std::string out = "t,lp_estimate,stderr,R\n";
  for (const CurvePoint& pt : curve.points) {
    out += std::to_string(pt.t);
    out += ',';
    out += format_double(pt.estimate);
    out += ',';
    out += format_double(pt.stderr_);
    out += ',';
    out += std::to_string(pt.reps);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string::npos ? std::string::npos
                                                             : next - pos));
    if (next == std::string::npos) return out;
    pos = next + 1;
  }
}

double parse_field_double(const std::string& s) {
  std::size_t idx = 0;
  double v = std::stod(s, &idx);
  if (idx != s.size()) throw ParseError("curve csv: bad number '" + s + "'");
  return v;
}

long parse_field_long(const std::string& s) {
  std::size_t idx = 0;
  long v = std::stol(s, &idx);
  if (idx != s.size()) throw ParseError("curve csv: bad integer '" + s + "'");
  return v;
}

}  // namespace

RateCurve parse_curve_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "t,lp_estimate,stderr,R")
    throw ParseError("curve csv: bad header");
  RateCurve curve;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 4) throw ParseError("curve csv: expected 4 fields");
    CurvePoint pt;
    try {
      pt.t = parse_field_long(fields[0]);
      pt.estimate = parse_field_double(fields[1]);
      pt.stderr_ = parse_field_double(fields[2]);
      pt.reps = parse_field_long(fields[3]);
    } catch (const std::invalid_argument&) {
      throw ParseError("curve csv: unparsable row '" + line + "'");
    }
    curve.points.push_back(pt);
  }
  return curve;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

std::string curves_svg(const std::vector<LabeledCurve>& curves,
                       const std::string& title) {
  const int W = 720, H = 480, ML = 70, MR = 30, MT = 40, MB = 50;
  double tmin = 0.0, tmax = 0.0, vmin = 0.0, vmax = 0.0;
  bool any = false;
  for (const auto& lc : curves)
    for (const CurvePoint& pt : lc.curve.points) {
      if (pt.t < 1 || !(pt.estimate > 0.0)) continue;
      double x = std::log10(static_cast<double>(pt.t));
      double y = std::log10(pt.estimate);
      if (!any) {
        tmin = tmax = x;
        vmin = vmax = y;
        any = true;
      } else {
        tmin = std::min(tmin, x);
        tmax = std::max(tmax, x);
        vmin = std::min(vmin, y);
        vmax = std::max(vmax, y);
      }
    }
  if (!any) {
    tmin = 0.0;
    tmax = 1.0;
    vmin = -1.0;
    vmax = 0.0;
  }
  if (tmax - tmin < 1e-9) tmax = tmin + 1.0;
  if (vmax - vmin < 1e-9) vmax = vmin + 1.0;

  auto px = [&](double x) {
    return ML + (x - tmin) / (tmax - tmin) * (W - ML - MR);
  };
  auto py = [&](double y) {
    return H - MB - (y - vmin) / (vmax - vmin) * (H - MT - MB);
  };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\">\n";
  svg << "<rect width=\"" << W << "\" height=\"" << H
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
  svg << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR
      << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML
      << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 14
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">log10 t</text>\n";
  svg << "<text x=\"18\" y=\"" << (MT + H - MB) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 18 "
      << (MT + H - MB) / 2 << ")\">log10 value</text>\n";

  int ci = 0;
  int ly = MT + 8;
  for (const auto& lc : curves) {
    const char* color = palette[ci % 6];
    std::ostringstream pts;
    for (const CurvePoint& pt : lc.curve.points) {
      if (pt.t < 1 || !(pt.estimate > 0.0)) continue;
      pts << px(std::log10(static_cast<double>(pt.t))) << ','
          << py(std::log10(pt.estimate)) << ' ';
    }
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
    svg << "<text x=\"" << W - MR - 6 << "\" y=\"" << ly
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\""
        << color << "\">" << lc.label << "</text>\n";
    ly += 16;
    ++ci;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bg

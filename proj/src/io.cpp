#include "cornersearch/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cornersearch/errors.hpp"

namespace cornersearch::io {

using nlohmann::json;

namespace {

std::string printf_number(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

const json& require_field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw InvalidTrajectoryError(std::string("missing field '") + name + "'");
  return *it;
}

json polar_points(const std::vector<PolarPoint>& points) {
  json out = json::array();
  for (const PolarPoint& p : points) out.push_back({p.theta, p.r});
  return out;
}

}  // namespace

std::string format_csv_number(double value) { return printf_number("%.9g", value); }

std::string format_text_number(double value) {
  std::string text = printf_number("%.9g", value);
  if (text.find_first_of("einIN") != std::string::npos) return text;
  const auto dot = text.find('.');
  if (dot != std::string::npos && text.size() > dot + 7) text.resize(dot + 7);
  return text;
}

Trajectory trajectory_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidTrajectoryError("trajectory document must be a JSON object");

  const json& d = require_field(doc, "d");
  if (!d.is_number()) throw InvalidTrajectoryError("d: expected a number");
  const double distance = d.get<double>();
  if (!std::isfinite(distance) || distance <= 0.0) throw InvalidTrajectoryError("d: must be positive");

  const json& ends = require_field(doc, "ends_at_corner");
  if (!ends.is_boolean()) throw InvalidTrajectoryError("ends_at_corner: expected true or false");

  const json& pts = require_field(doc, "points");
  if (!pts.is_array()) throw InvalidTrajectoryError("points: expected an array of [theta, r] pairs");

  Trajectory traj{SearchInstance(distance), {}, ends.get<bool>()};
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const json& p = pts[k];
    const std::string where = "points[" + std::to_string(k) + "]";
    if (!p.is_array() || p.size() != 2) throw InvalidTrajectoryError(where + ": expected [theta, r]");
    if (!p[0].is_number()) throw InvalidTrajectoryError(where + "[0]: theta must be a number");
    if (!p[1].is_number()) throw InvalidTrajectoryError(where + "[1]: r must be a number");
    traj.points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  traj.validate();
  return traj;
}

Trajectory parse_trajectory(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidTrajectoryError(std::string("malformed JSON: ") + e.what());
  }
  return trajectory_from_json(doc);
}

Trajectory read_trajectory_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidTrajectoryError("cannot open trajectory file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trajectory(buffer.str());
}

json to_json(const Trajectory& trajectory) {
  return {{"d", trajectory.instance.d()},
          {"points", polar_points(trajectory.points)},
          {"ends_at_corner", trajectory.ends_at_corner}};
}

json to_json(const RatioCertificate& certificate) {
  json positions = json::array();
  for (const PositionRatio& p : certificate.per_position) {
    positions.push_back({{"index", p.index}, {"robot_cost", p.robot_cost}, {"opt_cost", p.opt_cost}, {"ratio", p.ratio}});
  }
  // JSON has no infinity; an incomplete certificate carries a null ratio.
  json worst = certificate.complete ? json(certificate.worst_ratio) : json(nullptr);
  return {{"per_position", positions},
          {"worst_ratio", worst},
          {"binding_index", certificate.binding_index},
          {"complete", certificate.complete}};
}

json to_json(const StepSequence& sequence) {
  return {{"c", sequence.c},
          {"d", sequence.d},
          {"steps", sequence.steps},
          {"angles", sequence.angles},
          {"status", std::string(to_string(sequence.status))}};
}

json to_json(const OptimalRatio& solution) {
  json out = to_json(solution.sequence);
  out["c_opt"] = solution.c_opt;
  if (solution.sequence.reached_corner()) out["n_scans"] = scan_count(solution.sequence);
  return out;
}

json to_json(const ThresholdRow& row) {
  return {{"n_scans", row.n_scans}, {"d_max", row.d_max}, {"c_at_d_max", row.c_at_d_max}};
}

json to_json(const CurvePoint& point) {
  return {{"d", point.d}, {"c_opt", point.c_opt}, {"n_scans", point.n_scans}, {"x1", point.x1}};
}

json to_json(const LowerBoundReport& report) {
  return {{"delta", report.delta},
          {"steps", report.steps},
          {"bound_violations", report.bound_violations},
          {"total_distance", report.total_distance},
          {"distance_bound", report.distance_bound},
          {"step_cap_hit", report.step_cap_hit}};
}

json to_json(const AsymptoticReport& report) {
  return {{"epsilon", report.epsilon},
          {"N", report.window},
          {"d_used", report.d_used},
          {"found", report.found},
          {"intermediate_steps", report.intermediate_steps()},
          {"liftoff_ok", report.liftoff_ok()},
          {"average_ok", report.average_ok()},
          {"glide_ok", report.glide_ok()},
          {"reached", report.reached()},
          {"sequence", to_json(report.sequence)}};
}

json to_json(const OptimizationResult& result) {
  json out = to_json(result.trajectory());
  out["n"] = result.n;
  out["c_achieved"] = result.c_achieved;
  out["iterations"] = result.iterations;
  out["converged"] = result.converged;
  return out;
}

std::string curve_csv(std::span<const CurvePoint> curve) {
  std::string out = "d,c_opt,n_scans,x1\n";
  for (const CurvePoint& p : curve) {
    out += format_csv_number(p.d) + ',' + format_csv_number(p.c_opt) + ',' + std::to_string(p.n_scans) + ',' +
           format_csv_number(p.x1) + '\n';
  }
  return out;
}

std::string thresholds_csv(std::span<const ThresholdRow> rows) {
  std::string out = "n_scans,d_max,c_at_d_max\n";
  for (const ThresholdRow& r : rows) {
    out += std::to_string(r.n_scans) + ',' + format_csv_number(r.d_max) + ',' + format_csv_number(r.c_at_d_max) + '\n';
  }
  return out;
}

std::string render_plot_svg(std::span<const CurvePoint> curve) {
  if (curve.empty()) throw DomainError("cannot plot an empty curve");

  const auto [d_lo, d_hi] = std::minmax_element(curve.begin(), curve.end(),
                                                [](const CurvePoint& a, const CurvePoint& b) { return a.d < b.d; });
  const auto [c_lo, c_hi] = std::minmax_element(curve.begin(), curve.end(),
                                                [](const CurvePoint& a, const CurvePoint& b) { return a.c_opt < b.c_opt; });
  const double x_min = d_lo->d;
  const double x_span = d_hi->d - x_min;
  const double y_min = c_lo->c_opt;
  const double y_span = c_hi->c_opt - y_min;
  const double inner_w = kPlotWidth - 2.0 * kPlotMargin;
  const double inner_h = kPlotHeight - 2.0 * kPlotMargin;

  const auto px = [&](double d) { return kPlotMargin + (x_span > 0.0 ? (d - x_min) / x_span : 0.5) * inner_w; };
  const auto py = [&](double c) {
    return kPlotHeight - kPlotMargin - (y_span > 0.0 ? (c - y_min) / y_span : 0.5) * inner_h;
  };
  const auto f3 = [](double v) { return printf_number("%.3f", v); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + f3(kPlotWidth) + "\" height=\"" + f3(kPlotHeight) +
         "\" viewBox=\"0 0 " + f3(kPlotWidth) + ' ' + f3(kPlotHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const double left = kPlotMargin;
  const double right = kPlotWidth - kPlotMargin;
  const double top = kPlotMargin;
  const double bottom = kPlotHeight - kPlotMargin;
  svg += "<line x1=\"" + f3(left) + "\" y1=\"" + f3(bottom) + "\" x2=\"" + f3(right) + "\" y2=\"" + f3(bottom) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + f3(left) + "\" y1=\"" + f3(bottom) + "\" x2=\"" + f3(left) + "\" y2=\"" + f3(top) +
         "\" stroke=\"black\"/>\n";

  const auto label = [&](double x, double y, const char* anchor, const std::string& text) {
    svg += "<text x=\"" + f3(x) + "\" y=\"" + f3(y) + "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"" +
           anchor + "\">" + text + "</text>\n";
  };
  label(left, bottom + 18.0, "middle", format_text_number(x_min));
  label(right, bottom + 18.0, "middle", format_text_number(d_hi->d));
  label(left - 6.0, bottom + 4.0, "end", format_text_number(y_min));
  label(left - 6.0, top + 4.0, "end", format_text_number(c_hi->c_opt));
  label(0.5 * (left + right), bottom + 40.0, "middle", "distance to corner d");
  label(0.5 * (left + right), top - 24.0, "middle", "optimal competitive ratio c");

  svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < curve.size(); ++k) {
    if (k > 0) svg += ' ';
    svg += f3(px(curve[k].d)) + ',' + f3(py(curve[k].c_opt));
  }
  svg += "\"/>\n";

  label(px(c_hi->d), py(c_hi->c_opt) - 8.0, "middle",
        "max " + format_text_number(c_hi->c_opt) + " at d = " + format_text_number(c_hi->d));
  svg += "</svg>\n";
  return svg;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

void emit_plot(std::span<const CurvePoint> curve, const std::filesystem::path& path) {
  write_text_file(path, render_plot_svg(curve));
}

}  // namespace cornersearch::io

#pragma once

// File formats: trajectory/sequence/report JSON, curve and threshold CSV,
// SVG plots, and the number formats shared by all text output.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cornersearch/bounds_lab.hpp"
#include "cornersearch/circle_strategy.hpp"
#include "cornersearch/geometry.hpp"
#include "cornersearch/global_optimizer.hpp"

namespace cornersearch::io {

// 9 significant digits ("%.9g").
std::string format_csv_number(double value);

// The 9-digit rendering cut to at most 6 decimals, without rounding up:
// 2.0015255396 prints as 2.001525, 1.5 as 1.5.
std::string format_text_number(double value);

// {"d": number, "points": [[theta, r], ...], "ends_at_corner": bool}
// Throws InvalidTrajectoryError naming the offending field.
Trajectory trajectory_from_json(const nlohmann::json& doc);
Trajectory parse_trajectory(std::string_view text);
Trajectory read_trajectory_file(const std::filesystem::path& path);

nlohmann::json to_json(const Trajectory& trajectory);
nlohmann::json to_json(const RatioCertificate& certificate);
nlohmann::json to_json(const StepSequence& sequence);
nlohmann::json to_json(const OptimalRatio& solution);
nlohmann::json to_json(const ThresholdRow& row);
nlohmann::json to_json(const CurvePoint& point);
nlohmann::json to_json(const LowerBoundReport& report);
nlohmann::json to_json(const AsymptoticReport& report);
nlohmann::json to_json(const OptimizationResult& result);

// Header `d,c_opt,n_scans,x1`.
std::string curve_csv(std::span<const CurvePoint> curve);
// Header `n_scans,d_max,c_at_d_max`.
std::string thresholds_csv(std::span<const ThresholdRow> rows);

inline constexpr double kPlotWidth = 720.0;
inline constexpr double kPlotHeight = 440.0;
inline constexpr double kPlotMargin = 60.0;

// Competitive ratio against d as one polyline over labeled axes. Throws
// DomainError on an empty curve.
std::string render_plot_svg(std::span<const CurvePoint> curve);

// Writes render_plot_svg(curve) to path. Nothing is written when the curve is
// empty; IoError when the file cannot be written.
void emit_plot(std::span<const CurvePoint> curve, const std::filesystem::path& path);

// Whole-file write; IoError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace cornersearch::io

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cornersearch/bounds_lab.hpp"
#include "cornersearch/circle_strategy.hpp"

namespace cornersearch::cli {

enum class Subcommand { Solve, Curve, Thresholds, Verify, LowerBound, Asymptotics, Optimize, Reproduce };
enum class OutputFormat { Csv, Json, Svg, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitDomain = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::Solve;
  std::optional<std::string> output_path;
  std::optional<OutputFormat> format;  // unset: the subcommand's default

  double d = 0.0;
  double tol = kDefaultRatioTolerance;
  std::size_t step_cap = kDefaultStepCap;
  std::optional<std::string> trajectory_out;  // solve: also write the circle trajectory

  double d_min = 0.1;
  double d_max = 10.0;
  std::size_t samples = 991;

  std::size_t max_scans = 5;

  std::string trajectory_path;

  std::vector<double> deltas{0.01, 0.05, 0.1, 0.25, 0.5};

  double epsilon = 0.1;
  std::size_t window = kDefaultLiftoffWindow;
  double d_cap = kDefaultWitnessDiameterCap;

  std::size_t n = 1;
  std::size_t restarts = 16;
  std::uint64_t seed = 0;
};

struct ParseOutcome {
  std::optional<RunConfig> config;  // unset: nothing to run
  int exit_code = kExitOk;
  std::string message;              // help text or diagnostic
};

ParseOutcome parse_command_line(const std::vector<std::string>& args);

OutputFormat effective_format(const RunConfig& config);

// Throws DomainError for out-of-range parameters or a format the subcommand
// does not produce.
void validate(const RunConfig& config);

// Validates, dispatches and writes output to `out` or config.output_path.
// Returns 0 on success, 2 on domain errors, 1 on internal or I/O errors, and
// for `reproduce`, 1 when any check fails.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_command_line followed by run; args excludes the program name.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cornersearch::cli

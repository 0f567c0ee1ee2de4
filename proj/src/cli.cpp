#include "cornersearch/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cornersearch/errors.hpp"
#include "cornersearch/geometry.hpp"
#include "cornersearch/global_optimizer.hpp"
#include "cornersearch/io.hpp"
#include "cornersearch/reproduce.hpp"

namespace cornersearch::cli {

namespace {

using io::format_text_number;

const std::map<std::string, OutputFormat> kFormatNames{
    {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}, {"svg", OutputFormat::Svg}, {"text", OutputFormat::Text}};

std::vector<OutputFormat> allowed_formats(Subcommand sub) {
  switch (sub) {
    case Subcommand::Curve:
      return {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Svg, OutputFormat::Text};
    case Subcommand::Thresholds:
      return {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Text};
    case Subcommand::Reproduce:
      return {OutputFormat::Text};
    default:
      return {OutputFormat::Text, OutputFormat::Json};
  }
}

void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + '\n'; }

std::string solve_output(const RunConfig& config, OutputFormat format) {
  const OptimalRatio best = solve_optimal_c(config.d, config.tol, config.step_cap);
  if (config.trajectory_out) io::write_text_file(*config.trajectory_out, dump(io::to_json(to_trajectory(best.sequence))));
  if (format == OutputFormat::Json) return dump(io::to_json(best));

  std::ostringstream out;
  out << "d = " << format_text_number(config.d) << '\n'
      << "c_opt = " << format_text_number(best.c_opt) << '\n'
      << "n_scans = " << scan_count(best.sequence) << '\n'
      << "x1 = " << format_text_number(best.c_opt - 1.0) << '\n';
  for (std::size_t k = 0; k < best.sequence.steps.size(); ++k) {
    const bool last = k + 1 == best.sequence.steps.size();
    out << (last ? "leg to corner" : "step " + std::to_string(k + 1)) << ": x = "
        << format_text_number(best.sequence.steps[k]) << ", phi = " << format_text_number(best.sequence.angles[k])
        << '\n';
  }
  return out.str();
}

std::string curve_output(const RunConfig& config, OutputFormat format) {
  const std::vector<CurvePoint> curve = ratio_curve(config.d_min, config.d_max, config.samples, config.tol);
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json doc = nlohmann::json::array();
      for (const CurvePoint& p : curve) doc.push_back(io::to_json(p));
      return dump(doc);
    }
    case OutputFormat::Svg:
      return io::render_plot_svg(curve);
    case OutputFormat::Text: {
      std::ostringstream out;
      for (const CurvePoint& p : curve) {
        out << "d = " << format_text_number(p.d) << "  c_opt = " << format_text_number(p.c_opt)
            << "  n_scans = " << p.n_scans << '\n';
      }
      return out.str();
    }
    default:
      return io::curve_csv(curve);
  }
}

std::string thresholds_output(const RunConfig& config, OutputFormat format) {
  const std::vector<ThresholdRow> rows = threshold_table(config.max_scans, config.tol);
  if (format == OutputFormat::Json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const ThresholdRow& r : rows) doc.push_back(io::to_json(r));
    return dump(doc);
  }
  if (format == OutputFormat::Text) {
    std::ostringstream out;
    out << "scans  d_max      c at d_max\n";
    for (const ThresholdRow& r : rows) {
      out << r.n_scans << "      " << format_text_number(r.d_max) << "   " << format_text_number(r.c_at_d_max) << '\n';
    }
    return out.str();
  }
  return io::thresholds_csv(rows);
}

std::string verify_output(const RunConfig& config, OutputFormat format) {
  const Trajectory traj = io::read_trajectory_file(config.trajectory_path);
  const RatioCertificate cert = evaluate_trajectory(traj);
  if (format == OutputFormat::Json) return dump(io::to_json(cert));

  std::ostringstream out;
  out << "d = " << format_text_number(traj.instance.d()) << '\n';
  for (const PositionRatio& p : cert.per_position) {
    out << "position " << p.index << ": robot_cost = " << format_text_number(p.robot_cost)
        << ", opt_cost = " << format_text_number(p.opt_cost) << ", ratio = " << format_text_number(p.ratio) << '\n';
  }
  if (cert.complete) {
    out << "worst_ratio = " << format_text_number(cert.worst_ratio) << '\n';
  } else {
    out << "worst_ratio = inf (the trajectory never reaches the corner)\n";
  }
  out << "binding_index = " << cert.binding_index << '\n';
  return out.str();
}

std::string lower_bound_output(const RunConfig& config, OutputFormat format) {
  std::vector<LowerBoundReport> reports;
  for (const double delta : config.deltas) reports.push_back(lower_bound_experiment(delta, config.step_cap));
  if (format == OutputFormat::Json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const LowerBoundReport& r : reports) doc.push_back(io::to_json(r));
    return dump(doc);
  }
  std::ostringstream out;
  for (const LowerBoundReport& r : reports) {
    out << "delta = " << format_text_number(r.delta) << ": steps = " << r.steps.size()
        << ", total = " << format_text_number(r.total_distance) << ", bound = " << format_text_number(r.distance_bound)
        << ", violations = " << r.bound_violations.size() << '\n';
  }
  return out.str();
}

std::string asymptotics_output(const RunConfig& config, OutputFormat format) {
  const AsymptoticReport report = asymptotic_witness(config.epsilon, config.window, config.d_cap);
  if (format == OutputFormat::Json) return dump(io::to_json(report));

  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "epsilon = " << format_text_number(report.epsilon) << '\n' << "N = " << report.window << '\n';
  if (!report.found) out << "no witness below d = " << format_text_number(config.d_cap) << '\n';
  out << "d = " << format_text_number(report.d_used) << '\n'
      << "intermediate steps = " << report.intermediate_steps() << '\n'
      << "liftoff x_n >= 1 + (2^n - 1) eps: " << yes_no(report.liftoff_ok()) << '\n'
      << "mean of first N steps >= 5: " << yes_no(report.average_ok()) << '\n'
      << "steps from N on >= 5: " << yes_no(report.glide_ok()) << '\n'
      << "reached corner: " << yes_no(report.reached()) << '\n';
  return out.str();
}

std::string optimize_output(const RunConfig& config, OutputFormat format) {
  const OptimizationResult result = global_optimize(config.d, config.n, config.restarts, config.seed);
  if (format == OutputFormat::Json) return dump(io::to_json(result));

  std::ostringstream out;
  out << "d = " << format_text_number(result.d) << '\n'
      << "n = " << result.n << '\n'
      << "c_achieved = " << format_text_number(result.c_achieved) << '\n';
  for (std::size_t k = 0; k < result.points.size(); ++k) {
    out << "point " << k + 1 << ": theta = " << format_text_number(result.points[k].theta)
        << ", r = " << format_text_number(result.points[k].r) << '\n';
  }
  out << "iterations = " << result.iterations << '\n' << "converged = " << (result.converged ? "yes" : "no") << '\n';
  return out.str();
}

std::string produce(const RunConfig& config, bool& success) {
  const OutputFormat format = effective_format(config);
  switch (config.subcommand) {
    case Subcommand::Solve:
      return solve_output(config, format);
    case Subcommand::Curve:
      return curve_output(config, format);
    case Subcommand::Thresholds:
      return thresholds_output(config, format);
    case Subcommand::Verify:
      return verify_output(config, format);
    case Subcommand::LowerBound:
      return lower_bound_output(config, format);
    case Subcommand::Asymptotics:
      return asymptotics_output(config, format);
    case Subcommand::Optimize:
      return optimize_output(config, format);
    case Subcommand::Reproduce: {
      const std::vector<CheckResult> checks = run_reproduction_suite();
      success = all_passed(checks);
      return render_reproduction_report(checks);
    }
  }
  throw InternalError("unhandled subcommand");
}

}  // namespace

OutputFormat effective_format(const RunConfig& config) {
  if (config.format) return *config.format;
  switch (config.subcommand) {
    case Subcommand::Curve:
    case Subcommand::Thresholds:
      return OutputFormat::Csv;
    default:
      return OutputFormat::Text;
  }
}

void validate(const RunConfig& config) {
  const std::vector<OutputFormat> formats = allowed_formats(config.subcommand);
  require(std::find(formats.begin(), formats.end(), effective_format(config)) != formats.end(),
          "--format: this subcommand does not produce that format");
  switch (config.subcommand) {
    case Subcommand::Solve:
      require(positive(config.d), "--d: must be positive");
      require(positive(config.tol), "--tol: must be positive");
      require(config.step_cap > 0, "--step-cap: must be positive");
      break;
    case Subcommand::Curve:
      require(positive(config.d_min) && positive(config.d_max) && config.d_min < config.d_max,
              "--d-min/--d-max: need 0 < d_min < d_max");
      require(config.samples >= 2, "--samples: need at least 2");
      require(positive(config.tol), "--tol: must be positive");
      break;
    case Subcommand::Thresholds:
      require(positive(config.tol), "--tol: must be positive");
      break;
    case Subcommand::Verify:
      require(!config.trajectory_path.empty(), "--trajectory: a trajectory file is required");
      break;
    case Subcommand::LowerBound:
      require(!config.deltas.empty(), "--delta: at least one value is required");
      for (const double delta : config.deltas) require(delta > 0.0 && delta < 1.0, "--delta: values must lie in (0, 1)");
      require(config.step_cap > 0, "--step-cap: must be positive");
      break;
    case Subcommand::Asymptotics:
      require(positive(config.epsilon), "--epsilon: must be positive");
      require(config.window >= 1, "--n: must be at least 1");
      require(positive(config.d_cap), "--d-cap: must be positive");
      break;
    case Subcommand::Optimize:
      require(positive(config.d), "--d: must be positive");
      require(config.restarts >= 1, "--restarts: must be at least 1");
      break;
    case Subcommand::Reproduce:
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    bool success = true;
    const std::string text = produce(config, success);
    if (config.output_path) {
      io::write_text_file(*config.output_path, text);
    } else {
      out << text;
    }
    return success ? kExitOk : kExitInternal;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

ParseOutcome parse_command_line(const std::vector<std::string>& args) {
  RunConfig config;
  std::string format_name;
  std::string output_path;
  std::string trajectory_out;

  CLI::App app{"Competitive search around a corner with scan cost", "cornersearch"};
  app.require_subcommand(1);

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json", "svg", "text"}));
    sub->add_option("-o,--output", output_path, "Write output to this file instead of stdout");
  };

  CLI::App* solve = app.add_subcommand("solve", "Optimal circle-strategy ratio for one d");
  solve->add_option("--d", config.d, "Distance to the corner in scan-cost units")->required();
  solve->add_option("--tol", config.tol, "Bisection tolerance on c");
  solve->add_option("--step-cap", config.step_cap, "Maximum recursion steps");
  solve->add_option("--trajectory-out", trajectory_out, "Also write the scan points as a trajectory file");
  common(solve);

  CLI::App* curve = app.add_subcommand("curve", "Optimal ratio sampled over a range of d");
  curve->add_option("--d-min", config.d_min, "Smallest d");
  curve->add_option("--d-max", config.d_max, "Largest d");
  curve->add_option("--samples", config.samples, "Number of uniformly spaced samples");
  curve->add_option("--tol", config.tol, "Bisection tolerance on c");
  common(curve);

  CLI::App* thresholds = app.add_subcommand("thresholds", "Largest d for each number of scans");
  thresholds->add_option("--max-scans", config.max_scans, "Last scan count in the table");
  common(thresholds);

  CLI::App* verify = app.add_subcommand("verify", "Evaluate a trajectory file against the adversary");
  verify->add_option("--trajectory", config.trajectory_path, "Trajectory JSON file")->required();
  common(verify);

  CLI::App* lowerbound = app.add_subcommand("lowerbound", "Run the pessimistic recursion for ratios below 2");
  lowerbound->add_option("--delta", config.deltas, "Values of delta in (0, 1)");
  lowerbound->add_option("--step-cap", config.step_cap, "Maximum recursion steps");
  common(lowerbound);

  CLI::App* asymptotics = app.add_subcommand("asymptotics", "Find a diameter where c = 2 + epsilon lifts off");
  asymptotics->add_option("--epsilon", config.epsilon, "Excess over ratio 2");
  asymptotics->add_option("--n", config.window, "Lift-off window N");
  asymptotics->add_option("--d-cap", config.d_cap, "Give up above this diameter");
  common(asymptotics);

  CLI::App* optimize = app.add_subcommand("optimize", "Free placement of n scan points");
  optimize->add_option("--d", config.d, "Distance to the corner")->required();
  optimize->add_option("--n", config.n, "Number of intermediate scan points");
  optimize->add_option("--restarts", config.restarts, "Random starts besides the circle start");
  optimize->add_option("--seed", config.seed, "Seed of the first random start");
  common(optimize);

  CLI::App* reproduce = app.add_subcommand("reproduce", "Run every reference check and print a pass/fail table");
  common(reproduce);

  // CLI11 consumes the vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, kExitOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, kExitOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, kExitDomain, std::string("error: ") + e.what()};
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {solve, Subcommand::Solve},           {curve, Subcommand::Curve},
      {thresholds, Subcommand::Thresholds}, {verify, Subcommand::Verify},
      {lowerbound, Subcommand::LowerBound}, {asymptotics, Subcommand::Asymptotics},
      {optimize, Subcommand::Optimize},     {reproduce, Subcommand::Reproduce}};
  for (const auto& [sub, kind] : table) {
    if (sub->parsed()) config.subcommand = kind;
  }
  if (config.subcommand == Subcommand::Thresholds) config.tol = kDefaultThresholdTolerance;
  if (!format_name.empty()) config.format = kFormatNames.at(format_name);
  if (!output_path.empty()) config.output_path = output_path;
  if (!trajectory_out.empty()) config.trajectory_out = trajectory_out;
  return {config, kExitOk, {}};
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_command_line(args);
  if (!parsed.config) {
    (parsed.exit_code == kExitOk ? out : err) << parsed.message << '\n';
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err);
}

}  // namespace cornersearch::cli

// wva: pointer shifts of post-selected weak measurements for arbitrary
// probe wave functions.
//
// Commands
//   shift       compute the pointer shift for a scenario
//   scan        sweep one parameter, one CSV row per value
//   verify      run the claim suite, emit a JSON report plus evidence CSVs
//   probe-dump  tabulate the probe in momentum or position space
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure,
// 4 claim verification did not fully pass.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wva/claims.hpp"
#include "wva/errors.hpp"
#include "wva/fourier.hpp"
#include "wva/model.hpp"
#include "wva/probes.hpp"
#include "wva/quadrature.hpp"
#include "wva/scenario.hpp"
#include "wva/table.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerifyFailed = 4;

std::string format_value(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

struct GlobalOptions {
  std::string scenario_path;
  std::string out_path;
  std::string format = "json";
  std::optional<std::uint64_t> seed_override;
  unsigned jobs = 1;
};

// Writes payload to --out (or stdout) and, for file outputs, a sidecar
// <out>.meta.json carrying the run metadata that must stay out of the data
// file so reruns stay byte-identical.
void emit(const GlobalOptions& opts, const std::string& payload,
          const std::string& command) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) {
    throw wva::InputError("cannot open output file: " + opts.out_path);
  }
  out << payload;
  out.close();

  nlohmann::ordered_json meta;
  meta["tool"] = "wva";
  meta["command"] = command;
  meta["scenario"] = opts.scenario_path;
  meta["format"] = opts.format;
  if (opts.seed_override) meta["seed_override"] = *opts.seed_override;
  std::ofstream ms(opts.out_path + ".meta.json");
  if (ms) ms << meta.dump(2) << "\n";
}

wva::Scenario load_required_scenario(const GlobalOptions& opts) {
  if (opts.scenario_path.empty()) {
    throw wva::InputError("this command requires --scenario <file>");
  }
  wva::Scenario scenario = wva::load_scenario(opts.scenario_path);
  if (opts.seed_override) scenario.seed = *opts.seed_override;
  return scenario;
}

nlohmann::ordered_json report_to_json(const wva::ShiftReport& report) {
  nlohmann::ordered_json j;
  j["mean_initial"] = report.mean_initial;
  j["mean_final"] = report.mean_final;
  j["shift"] = report.shift;
  j["n_initial"] = report.n_initial;
  j["n_final"] = report.n_final;
  j["mean_kernel_norm"] = report.mean_kernel_norm;
  j["error_estimate"] = report.error_estimate;
  j["boundary_term_initial"] = report.boundary_term_initial;
  j["boundary_term_final"] = report.boundary_term_final;
  j["derivative_fallback"] = report.derivative_fallback;
  return j;
}

std::string report_to_csv(const wva::ShiftReport& report) {
  std::ostringstream os;
  os << "mean_initial(q/g),mean_final(q/g),shift(q/g),n_initial,n_final,"
        "mean_kernel_norm,error_estimate,boundary_term_initial,"
        "boundary_term_final\n";
  os << format_value(report.mean_initial) << ","
     << format_value(report.mean_final) << "," << format_value(report.shift)
     << "," << format_value(report.n_initial) << ","
     << format_value(report.n_final) << ","
     << format_value(report.mean_kernel_norm) << ","
     << format_value(report.error_estimate) << ","
     << format_value(report.boundary_term_initial) << ","
     << format_value(report.boundary_term_final) << "\n";
  return os.str();
}

int cmd_shift(const GlobalOptions& opts) {
  const wva::Scenario scenario = load_required_scenario(opts);
  const wva::ProbeSpec probe = scenario.probe.build(scenario.weak_value);
  const wva::ShiftReport report =
      wva::pointer_shift(probe, scenario.weak_value, scenario.quad);
  if (opts.format == "csv") {
    emit(opts, report_to_csv(report), "shift");
  } else {
    emit(opts, report_to_json(report).dump(2) + "\n", "shift");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// scan

struct ScanOptions {
  std::string param;  // theta | alpha | W | n
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
  std::string probe_set = "scenario";  // scenario | three
};

struct ScanRow {
  double value = 0.0;
  bool ok = false;
  std::string error_kind;
  std::vector<double> numbers;  // shift columns + means + error estimate
};

// One swept value -> one report, rebuilding weak value and/or probe.
wva::ShiftReport scan_point(const wva::Scenario& scenario,
                            const ScanOptions& scan, double value) {
  wva::WeakValue aw = scenario.weak_value;
  wva::ProbeDescription desc = scenario.probe;
  if (scan.param == "theta") {
    aw = wva::weak_value_spin(wva::SpinScenario{value});
  } else if (scan.param == "alpha") {
    if (desc.family != wva::ProbeFamily::ArbitraryShift) {
      throw wva::InputError("alpha scan requires an arbitrary_shift probe");
    }
    desc.alpha = value;
  } else if (scan.param == "W") {
    if (desc.family != wva::ProbeFamily::Gaussian) {
      throw wva::InputError("W scan requires a gaussian probe");
    }
    desc.width = value;
  } else if (scan.param == "n") {
    if (desc.family != wva::ProbeFamily::ArbitraryShift) {
      throw wva::InputError("n scan requires an arbitrary_shift probe");
    }
    desc.half_periods = static_cast<int>(std::lround(value));
  }
  return wva::pointer_shift(desc.build(aw), aw, scenario.quad);
}

int cmd_scan(const GlobalOptions& opts, const ScanOptions& scan) {
  const wva::Scenario scenario = load_required_scenario(opts);
  if (scan.param != "theta" && scan.param != "alpha" && scan.param != "W" &&
      scan.param != "n") {
    throw wva::InputError("scan parameter must be one of theta|alpha|W|n");
  }
  if (scan.steps < 1) {
    throw wva::InputError("scan requires --steps >= 1");
  }
  if (!(scan.min <= scan.max)) {
    throw wva::InputError("scan requires --min <= --max");
  }
  if (scan.probe_set != "scenario" && scan.probe_set != "three") {
    throw wva::InputError("--probe-set must be scenario|three");
  }
  if (scan.probe_set == "three" && scan.param != "theta") {
    throw wva::InputError("--probe-set three applies only to theta scans");
  }

  std::vector<double> values;
  for (int i = 0; i <= scan.steps; ++i) {
    double v = scan.min + (scan.max - scan.min) * static_cast<double>(i) /
                              static_cast<double>(scan.steps);
    if (scan.param == "n") v = std::lround(v);
    values.push_back(v);
  }

  std::vector<ScanRow> rows(values.size());
  const auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < values.size(); i += stride) {
      ScanRow& row = rows[i];
      row.value = values[i];
      try {
        if (scan.probe_set == "three") {
          const wva::WeakValue aw =
              wva::weak_value_spin(wva::SpinScenario{values[i]});
          const wva::ShiftReport weak = wva::pointer_shift(
              wva::ProbeSpec::gaussian(aw, 0.01, 0.0), aw, scenario.quad);
          const wva::ShiftReport claim = wva::pointer_shift(
              wva::ProbeSpec::ssh_optimal(aw), aw, scenario.quad);
          const wva::ShiftReport strong = wva::pointer_shift(
              wva::ProbeSpec::gaussian(aw, 100.0, 0.0), aw, scenario.quad);
          row.numbers = {weak.shift, claim.shift, strong.shift,
                         weak.error_estimate + claim.error_estimate +
                             strong.error_estimate};
        } else {
          const wva::ShiftReport rep = scan_point(scenario, scan, values[i]);
          row.numbers = {rep.shift, rep.mean_initial, rep.mean_final,
                         rep.error_estimate};
        }
        row.ok = true;
      } catch (const wva::Error& e) {
        row.ok = false;
        row.error_kind = e.kind();
      }
    }
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || values.size() <= 1) {
    worker(0, 1);
  } else {
    // Rows are gathered by index, so the output order never depends on
    // thread completion order.
    std::vector<std::thread> pool;
    const unsigned n_threads =
        std::min<unsigned>(jobs, static_cast<unsigned>(values.size()));
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
      pool.emplace_back(worker, t, n_threads);
    }
    for (auto& th : pool) th.join();
  }

  std::ostringstream os;
  const std::string unit =
      scan.param == "theta" ? "theta(rad)"
      : scan.param == "alpha" ? "alpha"
      : scan.param == "W"     ? "W(g*p)"
                              : "n";
  if (scan.probe_set == "three") {
    os << unit
       << ",shift_weak_probe(q/g),shift_claim_probe(q/g),"
          "shift_strong_probe(q/g),error_estimate,status\n";
  } else {
    os << unit
       << ",shift(q/g),mean_initial(q/g),mean_final(q/g),error_estimate,"
          "status\n";
  }
  std::size_t succeeded = 0;
  for (const auto& row : rows) {
    os << format_value(row.value);
    if (row.ok) {
      ++succeeded;
      for (double v : row.numbers) os << "," << format_value(v);
      os << ",ok\n";
    } else {
      for (std::size_t c = 0; c < 4; ++c) os << ",nan";
      os << ",error:" << row.error_kind << "\n";
    }
  }
  if (succeeded == 0) {
    std::cerr << "scan: every row failed\n";
    return kExitNumeric;
  }
  emit(opts, os.str(), "scan");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const GlobalOptions& opts, const std::string& claims_csv) {
  wva::ClaimConfig cfg;
  if (!opts.out_path.empty()) cfg.out_dir = opts.out_path;
  if (opts.seed_override) cfg.seed = *opts.seed_override;

  std::vector<std::string> ids;
  if (!claims_csv.empty()) {
    std::stringstream ss(claims_csv);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) ids.push_back(id);
    }
  }

  const std::vector<wva::ClaimResult> results = wva::run_claims(ids, cfg);

  bool all_pass = true;
  bool any_indeterminate = false;
  for (const auto& r : results) {
    std::cout << std::left << std::setw(4) << r.id << std::setw(15)
              << wva::to_string(r.verdict) << r.description << "\n";
    all_pass = all_pass && r.verdict == wva::Verdict::pass;
    any_indeterminate =
        any_indeterminate || r.verdict == wva::Verdict::indeterminate;
  }

  std::filesystem::create_directories(cfg.out_dir);
  const std::string report_path =
      (std::filesystem::path(cfg.out_dir) / "report.json").string();
  std::ofstream out(report_path);
  if (!out) {
    throw wva::InputError("cannot write report: " + report_path);
  }
  out << wva::claims_report_json(results, cfg);
  std::cout << "report: " << report_path << "\n";

  if (all_pass) return kExitOk;
  return kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// probe-dump

struct DumpOptions {
  std::string space = "k";
  double grid_min = -6.0;
  double grid_max = 6.0;
  double grid_step = 0.1;
};

int cmd_probe_dump(const GlobalOptions& opts, const DumpOptions& dump) {
  const wva::Scenario scenario = load_required_scenario(opts);
  const wva::ProbeSpec probe = scenario.probe.build(scenario.weak_value);
  if (dump.space != "k" && dump.space != "x") {
    throw wva::InputError("--space must be k or x");
  }
  if (!(dump.grid_step > 0.0) || !(dump.grid_min < dump.grid_max)) {
    throw wva::InputError("grid requires min < max and a positive step");
  }
  if (!probe.singular_points().empty() &&
      scenario.quad.singularity_epsilon <= 0.0) {
    throw wva::SingularProbe(
        "probe diverges inside its support; set numerics.singularity_epsilon "
        "to dump it");
  }

  std::vector<double> grid;
  for (double v = dump.grid_min; v <= dump.grid_max + 1e-12 * dump.grid_step;
       v += dump.grid_step) {
    grid.push_back(v);
  }

  wva::WaveFunctionTable table;
  if (dump.space == "k") {
    const wva::Interval support = probe.support();
    table.representation =
        wva::WaveFunctionTable::Representation::momentum;
    const double eps = scenario.quad.singularity_epsilon;
    for (double k : grid) {
      if (!support.contains(k)) continue;
      bool excluded = false;
      for (double s : probe.singular_points()) {
        if (std::abs(k - s) < eps) excluded = true;
      }
      if (excluded) continue;
      table.grid.push_back(k);
      table.amplitudes.push_back(probe.evaluate(k).value);
    }
    if (table.grid.empty()) {
      throw wva::InputError("k grid does not intersect the probe support");
    }
    table.norm_estimate = table.trapezoid_norm();
  } else {
    table = wva::transform_to_position(probe, grid, scenario.quad);
  }

  if (opts.format == "csv") {
    std::ostringstream os;
    table.to_csv(os);
    emit(opts, os.str(), "probe-dump");
  } else {
    emit(opts, table.to_json(), "probe-dump");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wva: post-selected pointer shifts for arbitrary probe wave "
      "functions"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--scenario", opts.scenario_path,
                 "Scenario JSON file (single source of truth for a run)");
  app.add_option("--out", opts.out_path,
                 "Output file (shift/scan/probe-dump) or directory (verify); "
                 "defaults to stdout");
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  std::uint64_t seed_raw = 0;
  auto* seed_opt =
      app.add_option("--seed", seed_raw, "Override the scenario seed");
  app.add_option("--jobs", opts.jobs, "Worker threads for scans")
      ->check(CLI::Range(1u, 256u));

  CLI::App* shift = app.add_subcommand("shift", "Compute the pointer shift");
  shift->fallthrough(true);

  ScanOptions scan;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Sweep one parameter");
  scan_cmd->fallthrough(true);
  scan_cmd->add_option("--param", scan.param, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"theta", "alpha", "W", "n"}));
  scan_cmd->add_option("--min", scan.min, "Lower end of the range")
      ->required();
  scan_cmd->add_option("--max", scan.max, "Upper end of the range")
      ->required();
  scan_cmd->add_option("--steps", scan.steps, "Number of steps (rows - 1)")
      ->required();
  scan_cmd->add_option("--probe-set", scan.probe_set,
                       "scenario: the scenario probe; three: weak/claim/"
                       "strong probe columns (theta scans)");

  std::string claims_csv;
  CLI::App* verify = app.add_subcommand("verify", "Run the claim suite");
  verify->fallthrough(true);
  verify->add_option("--claims", claims_csv,
                     "Comma-separated claim ids (default: all of C1..C7)");

  DumpOptions dump;
  CLI::App* dump_cmd =
      app.add_subcommand("probe-dump", "Tabulate the probe on a grid");
  dump_cmd->fallthrough(true);
  dump_cmd->add_option("--space", dump.space, "k (momentum) or x (position)")
      ->check(CLI::IsMember({"k", "x"}));
  dump_cmd->add_option("--grid-min", dump.grid_min, "Grid lower end");
  dump_cmd->add_option("--grid-max", dump.grid_max, "Grid upper end");
  dump_cmd->add_option("--grid-step", dump.grid_step, "Grid spacing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (seed_opt->count() > 0) opts.seed_override = seed_raw;

  try {
    if (shift->parsed()) return cmd_shift(opts);
    if (scan_cmd->parsed()) return cmd_scan(opts, scan);
    if (verify->parsed()) return cmd_verify(opts, claims_csv);
    if (dump_cmd->parsed()) return cmd_probe_dump(opts, dump);
    throw wva::InputError("no command given");
  } catch (const wva::InputError& e) {
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return kExitInput;
  } catch (const wva::Error& e) {
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

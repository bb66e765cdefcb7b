#ifndef WVA_SCENARIO_HPP
#define WVA_SCENARIO_HPP

// Scenario files: the single serializable source of truth for a run.
//
// Schema (JSON, unknown keys rejected at every level):
//   {
//     "weak_value": {"explicit": {"re": 1.7, "im": 0.0}}
//                   or {"spin": {"theta_radians": 2.0944}},
//     "probe": {"family": "...", "params": {...}},
//     "numerics": {"rel_tol": 1e-10, "abs_tol": 1e-12,
//                  "max_subdivisions": 4096, "singularity_epsilon": 0,
//                  "window_half_width": 200},
//     "seed": 20240817
//   }
//
// Families and their params:
//   "gaussian"        {"width": W > 0, "center": x0 = 0}
//   "ssh_optimal"     {}
//   "arbitrary_shift" {"alpha": a, "half_periods": n >= 1 (default 1)}
//   "variational"     {"mean_kernel_norm": m, "target_shift": d,
//                      "k_min": -pi/2, "k_max": pi/2}
//   "tabulated"       {"path": "probe.csv"}   (momentum-space CSV)
//
// "probe", "numerics", and "seed" are optional ("probe" defaults to the
// optimal-claim family); "weak_value" is required with exactly one of
// "explicit"/"spin".

#include <cstdint>
#include <string>

#include "wva/model.hpp"
#include "wva/probes.hpp"
#include "wva/quadrature.hpp"
#include "wva/table.hpp"

namespace wva {

// Retains the family parameters so a scan can rebuild the probe for a
// different weak value or a swept parameter.
struct ProbeDescription {
  ProbeFamily family = ProbeFamily::SSHOptimal;
  // gaussian
  double width = 0.01;
  double center = 0.0;
  // arbitrary_shift
  double alpha = 0.0;
  int half_periods = 1;
  // variational
  double mean_kernel_norm = 0.0;
  double target_shift = 0.0;
  double k_min = 0.0;
  double k_max = 0.0;
  // tabulated
  std::string table_path;
  WaveFunctionTable table;

  ProbeSpec build(const WeakValue& weak_value) const;
};

struct Scenario {
  WeakValue weak_value;
  bool from_spin = false;
  double theta = 0.0;  // meaningful only when from_spin
  ProbeDescription probe;
  QuadratureConfig quad;
  double window_half_width = 200.0;
  std::uint64_t seed = 20240817u;

  explicit Scenario(WeakValue aw) : weak_value(aw) {}
};

// Parses scenario JSON.  base_dir resolves relative tabulated-probe paths.
// Throws InputError (or a subclass) on any schema or validation problem.
Scenario parse_scenario_json(const std::string& text,
                             const std::string& base_dir);

// Reads and parses a scenario file; relative probe paths resolve against the
// file's own directory.
Scenario load_scenario(const std::string& path);

}  // namespace wva

#endif  // WVA_SCENARIO_HPP

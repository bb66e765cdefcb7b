#include "wva/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "wva/errors.hpp"

namespace wva {

namespace {

using nlohmann::json;

// Every object in a scenario is closed: a typo'd key must fail loudly, not
// silently fall back to a default.
void check_keys(const json& obj, const std::vector<std::string>& allowed,
                const std::string& where) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) ==
        allowed.end()) {
      throw InputError("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

const json& require_object(const json& obj, const std::string& key,
                           const std::string& where) {
  if (!obj.contains(key)) {
    throw InputError("missing \"" + key + "\" in " + where);
  }
  if (!obj.at(key).is_object()) {
    throw InputError("\"" + key + "\" in " + where + " must be an object");
  }
  return obj.at(key);
}

double require_number(const json& obj, const std::string& key,
                      const std::string& where) {
  if (!obj.contains(key)) {
    throw InputError("missing \"" + key + "\" in " + where);
  }
  if (!obj.at(key).is_number()) {
    throw InputError("\"" + key + "\" in " + where + " must be a number");
  }
  return obj.at(key).get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback,
                 const std::string& where) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number()) {
    throw InputError("\"" + key + "\" in " + where + " must be a number");
  }
  return obj.at(key).get<double>();
}

WeakValue parse_weak_value(const json& node, bool& from_spin, double& theta) {
  check_keys(node, {"explicit", "spin"}, "weak_value");
  const bool has_explicit = node.contains("explicit");
  const bool has_spin = node.contains("spin");
  if (has_explicit == has_spin) {
    throw InputError(
        "weak_value must contain exactly one of \"explicit\" and \"spin\"");
  }
  if (has_explicit) {
    const json& e = node.at("explicit");
    if (!e.is_object()) {
      throw InputError("weak_value.explicit must be an object");
    }
    check_keys(e, {"re", "im"}, "weak_value.explicit");
    const double re = require_number(e, "re", "weak_value.explicit");
    const double im = number_or(e, "im", 0.0, "weak_value.explicit");
    from_spin = false;
    theta = 0.0;
    return WeakValue(complexd(re, im));
  }
  const json& s = node.at("spin");
  if (!s.is_object()) {
    throw InputError("weak_value.spin must be an object");
  }
  check_keys(s, {"theta_radians"}, "weak_value.spin");
  theta = require_number(s, "theta_radians", "weak_value.spin");
  from_spin = true;
  return weak_value_spin(SpinScenario{theta});
}

ProbeDescription parse_probe(const json& node, const std::string& base_dir) {
  check_keys(node, {"family", "params"}, "probe");
  if (!node.contains("family") || !node.at("family").is_string()) {
    throw InputError("probe.family must be a string");
  }
  const std::string family = node.at("family").get<std::string>();
  json params = json::object();
  if (node.contains("params")) {
    if (!node.at("params").is_object()) {
      throw InputError("probe.params must be an object");
    }
    params = node.at("params");
  }

  ProbeDescription desc;
  if (family == "gaussian") {
    desc.family = ProbeFamily::Gaussian;
    check_keys(params, {"width", "center"}, "probe.params");
    desc.width = require_number(params, "width", "probe.params");
    desc.center = number_or(params, "center", 0.0, "probe.params");
    if (!(desc.width > 0.0)) {
      throw InputError("gaussian width must be positive");
    }
  } else if (family == "ssh_optimal") {
    desc.family = ProbeFamily::SSHOptimal;
    check_keys(params, {}, "probe.params");
  } else if (family == "arbitrary_shift") {
    desc.family = ProbeFamily::ArbitraryShift;
    check_keys(params, {"alpha", "half_periods"}, "probe.params");
    desc.alpha = require_number(params, "alpha", "probe.params");
    const double n = number_or(params, "half_periods", 1.0, "probe.params");
    if (n < 1.0 || n != std::floor(n)) {
      throw InputError("half_periods must be a positive integer");
    }
    desc.half_periods = static_cast<int>(n);
  } else if (family == "variational") {
    desc.family = ProbeFamily::Variational;
    check_keys(params,
               {"mean_kernel_norm", "target_shift", "k_min", "k_max"},
               "probe.params");
    desc.mean_kernel_norm =
        require_number(params, "mean_kernel_norm", "probe.params");
    desc.target_shift = require_number(params, "target_shift", "probe.params");
    desc.k_min = number_or(params, "k_min", -std::numbers::pi / 2.0,
                           "probe.params");
    desc.k_max = number_or(params, "k_max", std::numbers::pi / 2.0,
                           "probe.params");
    if (!(desc.k_min < desc.k_max)) {
      throw InputError("variational probe requires k_min < k_max");
    }
  } else if (family == "tabulated") {
    desc.family = ProbeFamily::Tabulated;
    check_keys(params, {"path"}, "probe.params");
    if (!params.contains("path") || !params.at("path").is_string()) {
      throw InputError("tabulated probe requires a string \"path\"");
    }
    desc.table_path = params.at("path").get<std::string>();
    std::filesystem::path p(desc.table_path);
    if (p.is_relative() && !base_dir.empty()) {
      p = std::filesystem::path(base_dir) / p;
    }
    try {
      desc.table = WaveFunctionTable::load_csv(
          p.string(), WaveFunctionTable::Representation::momentum);
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      throw InputError(std::string("cannot load tabulated probe: ") +
                       e.what());
    }
  } else {
    throw InputError("unknown probe family \"" + family + "\"");
  }
  return desc;
}

}  // namespace

ProbeSpec ProbeDescription::build(const WeakValue& weak_value) const {
  switch (family) {
    case ProbeFamily::Gaussian:
      return ProbeSpec::gaussian(weak_value, width, center);
    case ProbeFamily::SSHOptimal:
      return ProbeSpec::ssh_optimal(weak_value);
    case ProbeFamily::ArbitraryShift:
      return ProbeSpec::arbitrary_shift(weak_value, alpha, half_periods);
    case ProbeFamily::Variational:
      return ProbeSpec::variational(weak_value, mean_kernel_norm,
                                    target_shift, make_interval(k_min, k_max));
    case ProbeFamily::Tabulated:
      return ProbeSpec::tabulated(weak_value, table);
  }
  throw InputError("unrecognized probe family");
}

Scenario parse_scenario_json(const std::string& text,
                             const std::string& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw InputError("scenario must be a JSON object");
  }
  check_keys(root, {"weak_value", "probe", "numerics", "seed"}, "scenario");

  bool from_spin = false;
  double theta = 0.0;
  const WeakValue aw = parse_weak_value(
      require_object(root, "weak_value", "scenario"), from_spin, theta);

  Scenario scenario(aw);
  scenario.from_spin = from_spin;
  scenario.theta = theta;

  if (root.contains("probe")) {
    if (!root.at("probe").is_object()) {
      throw InputError("\"probe\" must be an object");
    }
    scenario.probe = parse_probe(root.at("probe"), base_dir);
  }

  if (root.contains("numerics")) {
    const json& n = root.at("numerics");
    if (!n.is_object()) {
      throw InputError("\"numerics\" must be an object");
    }
    check_keys(n,
               {"rel_tol", "abs_tol", "max_subdivisions",
                "singularity_epsilon", "window_half_width"},
               "numerics");
    scenario.quad.rel_tol =
        number_or(n, "rel_tol", scenario.quad.rel_tol, "numerics");
    scenario.quad.abs_tol =
        number_or(n, "abs_tol", scenario.quad.abs_tol, "numerics");
    const double subdiv =
        number_or(n, "max_subdivisions",
                  static_cast<double>(scenario.quad.max_subdivisions),
                  "numerics");
    scenario.quad.singularity_epsilon = number_or(
        n, "singularity_epsilon", scenario.quad.singularity_epsilon,
        "numerics");
    scenario.window_half_width = number_or(
        n, "window_half_width", scenario.window_half_width, "numerics");
    if (!(scenario.quad.rel_tol > 0.0)) {
      throw InputError("rel_tol must be positive");
    }
    if (!(scenario.quad.abs_tol >= 0.0)) {
      throw InputError("abs_tol must be non-negative");
    }
    if (subdiv < 1.0 || subdiv != std::floor(subdiv)) {
      throw InputError("max_subdivisions must be a positive integer");
    }
    scenario.quad.max_subdivisions = static_cast<int>(subdiv);
    if (!(scenario.quad.singularity_epsilon >= 0.0)) {
      throw InputError("singularity_epsilon must be non-negative");
    }
    if (!(scenario.window_half_width > 0.0)) {
      throw InputError("window_half_width must be positive");
    }
  }

  if (root.contains("seed")) {
    const json& s = root.at("seed");
    if (!s.is_number_integer() || s.get<long long>() < 0) {
      throw InputError("seed must be a non-negative integer");
    }
    scenario.seed = s.get<std::uint64_t>();
  }

  return scenario;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open scenario file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_json(
      buffer.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace wva

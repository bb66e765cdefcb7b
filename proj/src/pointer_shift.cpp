#include <cmath>

#include "wva/probes.hpp"
#include "wva/quadrature.hpp"

namespace wva {

ShiftReport pointer_shift(const ProbeSpec& probe, const WeakValue& aw,
                          const QuadratureConfig& cfg) {
  const std::vector<double>& singular = probe.singular_points();
  if (!singular.empty() && cfg.singularity_epsilon <= 0.0) {
    throw SingularProbe(
        "probe has non-integrable singular points; set "
        "singularity_epsilon > 0 to regularize");
  }

  const WaveFunction xi_i = [&probe](double k) {
    const ProbeEval e = probe.evaluate(k);
    return WaveFunctionValue{e.value, e.derivative};
  };
  // xi_f = B xi_i with the product-rule derivative B' xi_i + B xi_i'.
  const WaveFunction xi_f = [&probe, &aw](double k) {
    const ProbeEval e = probe.evaluate(k);
    const complexd b = kernel_b(aw, k);
    const complexd bp = kernel_b_prime(aw, k);
    return WaveFunctionValue{b * e.value, bp * e.value + b * e.derivative};
  };

  const std::vector<double>& breakpoints = probe.smooth_breakpoints();
  const MeanResult initial =
      mean_position(xi_i, probe.support(), cfg, singular, breakpoints);
  const MeanResult final_ =
      mean_position(xi_f, probe.support(), cfg, singular, breakpoints);

  ShiftReport report;
  report.mean_initial = initial.mean;
  report.mean_final = final_.mean;
  report.shift = final_.mean - initial.mean;
  report.n_initial = initial.norm;
  report.n_final = final_.norm;
  report.mean_kernel_norm = final_.norm / initial.norm;
  report.error_estimate = initial.error_estimate + final_.error_estimate;
  report.boundary_term_initial = initial.boundary_term;
  report.boundary_term_final = final_.boundary_term;
  report.derivative_fallback = probe.uses_derivative_fallback();
  return report;
}

}  // namespace wva

#ifndef WVA_QUADRATURE_HPP
#define WVA_QUADRATURE_HPP

// Adaptive integration of complex-valued functions on finite intervals and
// the pointer-moment functionals built on top of it.
//
// The integrator is a globally adaptive Gauss-Kronrod 7-15 scheme: each
// segment is estimated with the 15-point Kronrod rule, the embedded 7-point
// Gauss rule provides the error estimate, and the segment with the largest
// error is bisected until the total estimate meets the tolerances.  All
// Kronrod nodes are interior, so interval endpoints are never evaluated;
// integrable endpoint singularities (such as the probe-derivative divergence
// at k = +-pi/2) need no special handling.  Interior singular points are
// declared by the caller; the interval is split there, and an optional
// epsilon-neighbourhood around each declared point can be excluded entirely,
// which is how the non-integrable 1/|D| singularities of the variational
// probe are regularized.

#include <complex>
#include <functional>
#include <vector>

#include "wva/errors.hpp"
#include "wva/model.hpp"

namespace wva {

struct Interval {
  double k_minus = 0.0;
  double k_plus = 0.0;

  double width() const { return k_plus - k_minus; }
  bool contains(double k) const { return k >= k_minus && k <= k_plus; }
};

// Throws InputError unless k_minus < k_plus and both are finite.
Interval make_interval(double k_minus, double k_plus);

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4096;
  // When > 0, quadrature excludes (p - eps, p + eps) around every declared
  // singular point p instead of merely splitting there.  Must stay below a
  // quarter of the interval width so that something is left to integrate.
  double singularity_epsilon = 0.0;
};

struct IntegralResult {
  complexd value{0.0, 0.0};
  double error_estimate = 0.0;
  int subdivisions = 0;
};

using Integrand = std::function<complexd(double)>;

// Integrate f over iv.  Declared singular points inside iv become segment
// boundaries (never evaluation points); with cfg.singularity_epsilon > 0
// their epsilon-neighbourhoods are removed from the domain.
// smooth_breakpoints also become segment boundaries but are never excluded:
// they mark points of reduced smoothness (e.g. spline knots) where the
// integrand is continuous, so aligning segments with them restores the
// rule's full order.  Throws MaxSubdivisionsExceeded if the tolerance
// cannot be met within the budget and NonFiniteEvaluation if f returns
// NaN/inf at a non-declared point.  When the remaining error estimate is
// dominated by accumulated floating-point round-off (which bisection cannot
// reduce), the integral returns successfully with that honest estimate
// instead of throwing.
IntegralResult integrate(const Integrand& f, const Interval& iv,
                         const QuadratureConfig& cfg,
                         const std::vector<double>& singular_points = {},
                         const std::vector<double>& smooth_breakpoints = {});

// A wave function together with its derivative at the same point, which is
// what the moment integrands consume.
struct WaveFunctionValue {
  complexd value{0.0, 0.0};
  complexd derivative{0.0, 0.0};
};

using WaveFunction = std::function<WaveFunctionValue(double)>;

// Result of mean_position.  The mean is always computed from the
// anti-Hermitian part, <x> = -Im(integral xi* xi' dk)/N: the naive expression
// i integral xi* xi' is not real, and its real part is the pure boundary
// quantity (|xi(k+)|^2 - |xi(k-)|^2)/2.  That boundary quantity is reported
// separately (normalized by N), and the identity
// Re(integral xi* xi') = [|xi|^2/2] at the segment ends is evaluated on every
// smooth segment as a cross-check; the largest violation is returned in
// boundary_identity_residual.
struct MeanResult {
  double mean = 0.0;
  double boundary_term = 0.0;
  double norm = 0.0;
  double error_estimate = 0.0;
  double boundary_identity_residual = 0.0;
};

MeanResult mean_position(const WaveFunction& xi, const Interval& iv,
                         const QuadratureConfig& cfg,
                         const std::vector<double>& singular_points = {},
                         const std::vector<double>& smooth_breakpoints = {});

// Full report of a pointer-shift computation.  The initial mean comes from
// xi_i, the final mean from xi_f = B xi_i (derivative by the product rule),
// each normalized by its own norm; the mean kernel norm is N_f/N_i, the
// probe-weighted average of |B|^2.
struct ShiftReport {
  double mean_initial = 0.0;
  double mean_final = 0.0;
  double shift = 0.0;
  double n_initial = 0.0;
  double n_final = 0.0;
  double mean_kernel_norm = 0.0;
  double error_estimate = 0.0;
  double boundary_term_initial = 0.0;
  double boundary_term_final = 0.0;
  // True when the probe could not supply an analytic derivative and a
  // centered finite difference was used instead (tabulated probes only).
  bool derivative_fallback = false;
};

class ProbeSpec;  // defined in wva/probes.hpp

// Computes the shift produced by the probe under the kernel of aw.  Probes
// with singular points require cfg.singularity_epsilon > 0 (else
// SingularProbe is thrown).
ShiftReport pointer_shift(const ProbeSpec& probe, const WeakValue& aw,
                          const QuadratureConfig& cfg);

}  // namespace wva

#endif  // WVA_QUADRATURE_HPP

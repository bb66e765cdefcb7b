#ifndef WVA_PROBES_HPP
#define WVA_PROBES_HPP

// Probe wave-function families in momentum representation.
//
//   Gaussian        (2 pi W^2)^{-1/4} e^{-k^2/(4W^2)} e^{-i x0 k}
//                   momentum spread W, centered at position x0, truncated to
//                   a finite support (see ProbeSpec::gaussian).
//   SSHOptimal      sqrt(|Re A_w|/pi) e^{-i X k}/B(k) on [-pi/2, pi/2],
//                   X = (1+|A_w|^2)/(2 Re A_w): the probe advertised as
//                   optimal, normalized through the closed-form period
//                   integral of 1/|B|^2.
//   ArbitraryShift  e^{-i alpha G(k)}/B(k) on [-n pi/2, n pi/2], with G a
//                   branch-continuous primitive of 1/|B|^2: the normalizable
//                   family whose shift is affine in alpha and therefore
//                   unbounded.
//   Variational     e^{-i (x_f k + gamma H(k))}/sqrt(|D(k)|) with
//                   D = |B|^2 - m, gamma = Delta* m - Re A_w, H a primitive
//                   of 1/D: the stationary solution of the corrected
//                   variational problem; non-normalizable across the zeros
//                   of D, which is exactly why it needs epsilon
//                   regularization.
//   Tabulated       cubic interpolation through caller-supplied samples;
//                   derivatives by centered finite differences.
//
// ProbeSpec values are immutable after construction; evaluation is pure.

#include <memory>
#include <vector>

#include "wva/model.hpp"
#include "wva/quadrature.hpp"
#include "wva/table.hpp"

namespace wva {

enum class ProbeFamily {
  Gaussian,
  SSHOptimal,
  ArbitraryShift,
  Variational,
  Tabulated,
};

// Branch-continuous primitive of 1/|B(k)|^2 with G(0) = 0.  The closed form
// comes from the Weierstrass substitution t = tan k,
//     G(k) = [ arctan((|A_w|^2 t + Im A_w)/|Re A_w|) - arctan(Im A_w/|Re A_w|)
//            + j pi ] / |Re A_w|,
// where j counts the half-period branch containing k; the j pi bookkeeping
// makes G continuous across k = pi/2 + j pi, where the arctan argument jumps
// between +-infinity.  It satisfies G(k + pi) - G(k) = pi/|Re A_w| exactly.
double primitive_g(const WeakValue& aw, double k);

// Numerical primitive of 1/D(k), D = |B|^2 - m, defined piecewise between
// consecutive zeros of D with the segment midpoint as reference point
// (H diverges logarithmically at the zeros, so no continuous primitive
// exists across them; the per-segment constants are unobservable in any
// shift computation because only the derivative of the phase enters the
// moment integrands).
class PrimitiveH {
 public:
  PrimitiveH(const WeakValue& aw, double m, Interval iv);

  // k must lie strictly between two adjacent singular points (or between an
  // interval end and the nearest one); throws EvaluationAtSingularity at the
  // zeros themselves.
  double operator()(double k) const;

  const std::vector<double>& zeros() const { return zeros_; }
  double m() const { return m_; }

 private:
  WeakValue aw_;
  double m_;
  Interval iv_;
  std::vector<double> zeros_;
};

struct ProbeEval {
  complexd value{0.0, 0.0};
  complexd derivative{0.0, 0.0};
};

class ProbeSpec {
 public:
  // Gaussian of momentum spread W > 0 centered at position x0.  The support
  // is [-L, L] with L = min(8W, 64); when L exceeds a kernel period the
  // support is snapped to the nearest multiple of pi/2, keeping it
  // commensurate with the period of |B|^2 -- otherwise the truncation ripple
  // of the wide-probe integrals (~W^{-1} sin 2L) dominates the strong-limit
  // plateau error.
  static ProbeSpec gaussian(const WeakValue& aw, double width, double center);

  static ProbeSpec ssh_optimal(const WeakValue& aw);

  // alpha real, n >= 1; support [-n pi/2, n pi/2].
  static ProbeSpec arbitrary_shift(const WeakValue& aw, double alpha, int n);

  // The stationary probe for mean kernel norm m and target shift
  // target_shift, with gauge center x_f = 0 (the equation parameters are
  // then x_f = 0, x_i = -target_shift; any other gauge is reachable through
  // the e^{i x0 k} symmetry).  m must lie strictly inside the range of
  // |B|^2 and iv must contain at least one zero of D.
  static ProbeSpec variational(const WeakValue& aw, double m,
                               double target_shift, Interval iv);

  // Samples in momentum representation; cubic interpolation in between,
  // derivative by centered finite differences of step 1e-6 * width (the
  // fallback flagged in ShiftReport.derivative_fallback).
  static ProbeSpec tabulated(const WeakValue& aw, WaveFunctionTable table);

  ProbeEval evaluate(double k) const;

  ProbeFamily family() const { return family_; }
  const WeakValue& weak_value() const { return aw_; }
  const Interval& support() const { return support_; }
  // Non-integrable singular points (zeros of D for the variational family;
  // empty for every other family).
  const std::vector<double>& singular_points() const {
    return singular_points_;
  }
  // Interior points of reduced smoothness that quadrature should align
  // segment boundaries with: the interior spline knots for tabulated
  // probes (the interpolant is only C^2 there), empty otherwise.
  const std::vector<double>& smooth_breakpoints() const {
    return smooth_breakpoints_;
  }
  bool uses_derivative_fallback() const {
    return family_ == ProbeFamily::Tabulated;
  }

  // Family parameters (meaningful subset per family; zero otherwise).
  double gaussian_width() const { return width_; }
  double gaussian_center() const { return center_; }
  double alpha() const { return alpha_; }
  int half_period_count() const { return n_; }
  double mean_kernel_norm() const { return m_; }
  double target_shift() const { return target_shift_; }

 private:
  ProbeSpec() = default;

  ProbeFamily family_ = ProbeFamily::Gaussian;
  WeakValue aw_{complexd(1.0, 0.0)};
  Interval support_{};
  std::vector<double> singular_points_;
  std::vector<double> smooth_breakpoints_;

  double width_ = 0.0;
  double center_ = 0.0;
  double alpha_ = 0.0;
  int n_ = 0;
  double m_ = 0.0;
  double target_shift_ = 0.0;
  double gamma_ = 0.0;

  std::shared_ptr<const PrimitiveH> h_;
  struct Spline;
  std::shared_ptr<const Spline> spline_;
};

// The affine law Delta(alpha) of the ArbitraryShift family:
//   predicted shift = intercept + slope_sign * slope_magnitude * alpha,
//   intercept       = (1+|A_w|^2)/(2 Re A_w),
//   slope_magnitude = ((1-|Re A_w|)^2 + (Im A_w)^2)/(2 (Re A_w)^2).
// The printed sources disagree about the sign of the alpha term, so
// slope_sign is not hard-coded: it is measured once per weak value by a
// two-point pointer_shift fit and cached (the measurement gives -1).
struct PredictedShift {
  double intercept = 0.0;
  double slope_magnitude = 0.0;
  int slope_sign = 0;
  double shift = 0.0;  // intercept + slope_sign*slope_magnitude*alpha
};

PredictedShift predicted_shift_arbitrary(const WeakValue& aw, double alpha);

// Inverts the affine law for the alpha that produces the target shift.
// Throws TrivialWeakValue for A_w = +-1, where the slope vanishes and every
// probe yields the same shift.
double solve_alpha_for_shift(const WeakValue& aw, double target);

// Free-function spelling of ProbeSpec::variational.
ProbeSpec variational_probe(const WeakValue& aw, double m, double target_shift,
                            Interval iv);

// Zeros of D(k) = |B(k)|^2 - m inside iv, sorted.  Throws
// MeanKernelNormOutOfRange when m is not strictly inside the range of |B|^2.
std::vector<double> kernel_norm_crossings(const WeakValue& aw, double m,
                                          Interval iv);

}  // namespace wva

#endif  // WVA_PROBES_HPP

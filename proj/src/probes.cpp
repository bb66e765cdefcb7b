#include "wva/probes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace wva {

namespace {

constexpr complexd kI{0.0, 1.0};

}  // namespace

// ---------------------------------------------------------------------------
// primitive_g

double primitive_g(const WeakValue& aw, double k) {
  const double r = aw.abs_re();
  const double asq = aw.abs_sq();
  const double im = aw.im();

  // Branch index: j = 0 for k in (-pi/2, pi/2], shifting by one per half
  // period.  Within a branch, t = tan(k - j pi) is finite and the closed
  // form applies directly; exactly at the branch edges |k - j pi| = pi/2 the
  // arctan saturates at +-pi/2, which is its continuous limit.
  const double j = std::floor(k / M_PI + 0.5);
  const double kk = k - j * M_PI;

  double base;
  if (std::abs(std::abs(kk) - 0.5 * M_PI) < 1e-12) {
    base = (kk > 0.0) ? 0.5 * M_PI : -0.5 * M_PI;
  } else {
    base = std::atan((asq * std::tan(kk) + im) / r);
  }
  return (base + j * M_PI - std::atan(im / r)) / r;
}

// ---------------------------------------------------------------------------
// zeros of D and the numerical primitive H

std::vector<double> kernel_norm_crossings(const WeakValue& aw, double m,
                                          Interval iv) {
  const KernelCoefficients co = kernel_coefficients(aw);
  // |B|^2 = a + R cos(2k - phi0) with R = hypot(b, c): range [a-R, a+R].
  const double radius = std::hypot(co.b, co.c);
  const double phi0 = std::atan2(co.c, co.b);
  if (!(radius > 0.0) || !(m > co.a - radius) || !(m < co.a + radius)) {
    throw MeanKernelNormOutOfRange(
        "mean kernel norm " + std::to_string(m) +
        " outside the open range of |B|^2 (" +
        std::to_string(co.a - radius) + ", " + std::to_string(co.a + radius) +
        ")");
  }
  const double t0 = std::acos((m - co.a) / radius);

  std::vector<double> zeros;
  // Solutions of cos(2k - phi0) = (m-a)/R: 2k = phi0 +- t0 + 2 pi j.
  for (int s : {+1, -1}) {
    const double base = 0.5 * (phi0 + s * t0);
    const double j_lo = std::ceil((iv.k_minus - base) / M_PI - 1e-12);
    for (double j = j_lo;; j += 1.0) {
      const double kz = base + j * M_PI;
      if (kz > iv.k_plus + 1e-12) break;
      if (kz >= iv.k_minus - 1e-12 && kz <= iv.k_plus + 1e-12) {
        zeros.push_back(kz);
      }
    }
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

PrimitiveH::PrimitiveH(const WeakValue& aw, double m, Interval iv)
    : aw_(aw), m_(m), iv_(iv) {
  zeros_ = kernel_norm_crossings(aw, m, iv);
}

double PrimitiveH::operator()(double k) const {
  if (!iv_.contains(k)) {
    throw OutOfSupport("PrimitiveH: k outside the working interval");
  }
  for (double z : zeros_) {
    if (std::abs(k - z) < 1e-13) {
      throw EvaluationAtSingularity(
          "PrimitiveH evaluated at a zero of D, k = " + std::to_string(k));
    }
  }
  // Reference point: midpoint of the smooth segment containing k.
  double lo = iv_.k_minus;
  double hi = iv_.k_plus;
  for (double z : zeros_) {
    if (z < k) lo = std::max(lo, z);
    if (z > k) hi = std::min(hi, z);
  }
  const double ref = 0.5 * (lo + hi);
  if (k == ref) return 0.0;

  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-14;
  const WeakValue aw = aw_;
  const double m = m_;
  const Integrand f = [aw, m](double kk) {
    return complexd(1.0 / (kernel_abs_sq(aw, kk) - m), 0.0);
  };
  const IntegralResult res = (k > ref)
                                 ? integrate(f, Interval{ref, k}, cfg)
                                 : integrate(f, Interval{k, ref}, cfg);
  const double value = res.value.real();
  return (k > ref) ? value : -value;
}

// ---------------------------------------------------------------------------
// tabulated-probe spline

// Natural cubic spline through the samples, real and imaginary parts
// independently.  Storage: second derivatives at the knots.
struct ProbeSpec::Spline {
  std::vector<double> x;
  std::vector<complexd> y;
  std::vector<complexd> y2;

  explicit Spline(const WaveFunctionTable& table)
      : x(table.grid), y(table.amplitudes) {
    const std::size_t n = x.size();
    y2.assign(n, complexd{0.0, 0.0});
    std::vector<complexd> u(n, complexd{0.0, 0.0});
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
      const complexd p = sig * y2[i - 1] + 2.0;
      y2[i] = (sig - 1.0) / p;
      const complexd dd =
          (y[i + 1] - y[i]) / (x[i + 1] - x[i]) -
          (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
      u[i] = (6.0 * dd / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / p;
    }
    for (std::size_t i = n - 1; i-- > 1;) {
      y2[i] = y2[i] * y2[i + 1] + u[i];
    }
    y2.front() = y2.back() = complexd{0.0, 0.0};
  }

  complexd operator()(double k) const {
    const auto it = std::upper_bound(x.begin(), x.end(), k);
    std::size_t hi = static_cast<std::size_t>(it - x.begin());
    hi = std::clamp<std::size_t>(hi, 1, x.size() - 1);
    const std::size_t lo = hi - 1;
    const double h = x[hi] - x[lo];
    const double a = (x[hi] - k) / h;
    const double b = (k - x[lo]) / h;
    return a * y[lo] + b * y[hi] +
           ((a * a * a - a) * y2[lo] + (b * b * b - b) * y2[hi]) * (h * h) /
               6.0;
  }
};

// ---------------------------------------------------------------------------
// factories

ProbeSpec ProbeSpec::gaussian(const WeakValue& aw, double width,
                              double center) {
  if (!(width > 0.0)) {
    throw InputError("gaussian probe requires width > 0");
  }
  ProbeSpec p;
  p.family_ = ProbeFamily::Gaussian;
  p.aw_ = aw;
  p.width_ = width;
  p.center_ = center;
  double half = std::min(8.0 * width, 64.0);
  if (half >= 2.0 * M_PI) {
    // Snap to a multiple of pi/2 so the support covers an integer number of
    // quarter periods of |B|^2; see the factory comment in the header.
    half = std::round(half / (0.5 * M_PI)) * 0.5 * M_PI;
  }
  p.support_ = Interval{-half, half};
  return p;
}

ProbeSpec ProbeSpec::ssh_optimal(const WeakValue& aw) {
  ProbeSpec p;
  p.family_ = ProbeFamily::SSHOptimal;
  p.aw_ = aw;
  p.support_ = Interval{-0.5 * M_PI, 0.5 * M_PI};
  return p;
}

ProbeSpec ProbeSpec::arbitrary_shift(const WeakValue& aw, double alpha,
                                     int n) {
  if (n < 1) {
    throw InputError("arbitrary-shift probe requires n >= 1");
  }
  ProbeSpec p;
  p.family_ = ProbeFamily::ArbitraryShift;
  p.aw_ = aw;
  p.alpha_ = alpha;
  p.n_ = n;
  p.support_ = Interval{-0.5 * n * M_PI, 0.5 * n * M_PI};
  return p;
}

ProbeSpec ProbeSpec::variational(const WeakValue& aw, double m,
                                 double target_shift, Interval iv) {
  ProbeSpec p;
  p.family_ = ProbeFamily::Variational;
  p.aw_ = aw;
  p.m_ = m;
  p.target_shift_ = target_shift;
  p.support_ = iv;
  p.h_ = std::make_shared<PrimitiveH>(aw, m, iv);
  p.singular_points_ = p.h_->zeros();
  if (p.singular_points_.empty()) {
    throw NoSingularPointInInterval(
        "variational probe: the interval contains no zero of D, violating "
        "the self-consistency condition");
  }
  p.gamma_ = target_shift * m - aw.re();
  return p;
}

ProbeSpec variational_probe(const WeakValue& aw, double m, double target_shift,
                            Interval iv) {
  return ProbeSpec::variational(aw, m, target_shift, iv);
}

ProbeSpec ProbeSpec::tabulated(const WeakValue& aw, WaveFunctionTable table) {
  table.validate();
  if (table.representation != WaveFunctionTable::Representation::momentum) {
    throw WrongRepresentation("tabulated probes take momentum-space tables");
  }
  ProbeSpec p;
  p.family_ = ProbeFamily::Tabulated;
  p.aw_ = aw;
  p.support_ = Interval{table.grid.front(), table.grid.back()};
  // The cubic interpolant is only C^2 at interior knots; exposing them lets
  // quadrature align segments there and keep its full order per cell.
  p.smooth_breakpoints_.assign(table.grid.begin() + 1, table.grid.end() - 1);
  p.spline_ = std::make_shared<Spline>(table);
  return p;
}

// ---------------------------------------------------------------------------
// evaluation

ProbeEval ProbeSpec::evaluate(double k) const {
  if (!support_.contains(k)) {
    throw OutOfSupport("probe evaluated at k = " + std::to_string(k) +
                       " outside its support");
  }

  switch (family_) {
    case ProbeFamily::Gaussian: {
      const double w2 = width_ * width_;
      const complexd value = std::pow(2.0 * M_PI * w2, -0.25) *
                             std::exp(-k * k / (4.0 * w2)) *
                             std::exp(-kI * center_ * k);
      return {value, (-k / (2.0 * w2) - kI * center_) * value};
    }
    case ProbeFamily::SSHOptimal: {
      const double xf = shift_ssh_claimed(aw_);
      const complexd b = kernel_b(aw_, k);
      const complexd value = std::sqrt(aw_.abs_re() / M_PI) *
                             std::exp(-kI * xf * k) / b;
      const complexd logderiv = -kI * xf - kernel_b_prime(aw_, k) / b;
      return {value, logderiv * value};
    }
    case ProbeFamily::ArbitraryShift: {
      const complexd b = kernel_b(aw_, k);
      const complexd value =
          std::exp(-kI * alpha_ * primitive_g(aw_, k)) / b;
      const complexd logderiv =
          -kI * alpha_ / std::norm(b) - kernel_b_prime(aw_, k) / b;
      return {value, logderiv * value};
    }
    case ProbeFamily::Variational: {
      for (double z : singular_points_) {
        if (std::abs(k - z) < 1e-13) {
          throw EvaluationAtSingularity(
              "variational probe evaluated at a zero of D, k = " +
              std::to_string(k));
        }
      }
      const KernelValue kv = kernel(aw_, k);
      const double d = kv.b_abs_sq - m_;
      const double dprime = 2.0 * kv.b_star_bprime.real();
      const double h = (*h_)(k);
      const complexd value =
          std::exp(-kI * gamma_ * h) / std::sqrt(std::abs(d));
      // xi'/xi = -D'/(2D) - i gamma/D (gauge center x_f = 0).
      const complexd logderiv = -dprime / (2.0 * d) - kI * gamma_ / d;
      return {value, logderiv * value};
    }
    case ProbeFamily::Tabulated: {
      const Spline& s = *spline_;
      const complexd value = s(k);
      // Centered finite difference with the step pulled inside the support
      // near the edges (one-sided weighting keeps first-order accuracy
      // there; interior points get the full centered stencil).
      const double h = 1e-6 * support_.width();
      const double lo = std::min(h, k - support_.k_minus);
      const double hi = std::min(h, support_.k_plus - k);
      const complexd derivative = (s(k + hi) - s(k - lo)) / (hi + lo);
      return {value, derivative};
    }
  }
  throw Error("unreachable probe family");
}

// ---------------------------------------------------------------------------
// affine shift law

namespace {

// Measured sign of d Delta / d alpha, cached per weak value.  Two
// pointer_shift evaluations at alpha = +-1 settle it; the map makes the
// startup cost a one-off per weak value.
int measured_slope_sign(const WeakValue& aw) {
  static std::map<std::pair<double, double>, int> cache;
  static std::mutex mutex;
  const std::pair<double, double> key{aw.re(), aw.im()};
  {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  QuadratureConfig cfg;
  const ShiftReport plus =
      pointer_shift(ProbeSpec::arbitrary_shift(aw, 1.0, 1), aw, cfg);
  const ShiftReport minus =
      pointer_shift(ProbeSpec::arbitrary_shift(aw, -1.0, 1), aw, cfg);
  const int sign = (plus.shift - minus.shift) >= 0.0 ? +1 : -1;
  {
    std::lock_guard<std::mutex> lock(mutex);
    cache[key] = sign;
  }
  return sign;
}

}  // namespace

PredictedShift predicted_shift_arbitrary(const WeakValue& aw, double alpha) {
  PredictedShift out;
  out.intercept = shift_ssh_claimed(aw);
  const double r = aw.re();
  const double one_minus = 1.0 - aw.abs_re();
  out.slope_magnitude =
      (one_minus * one_minus + aw.im() * aw.im()) / (2.0 * r * r);
  if (out.slope_magnitude == 0.0) {
    // A_w = +-1: the shift is alpha-independent and the sign is moot.
    out.slope_sign = 0;
    out.shift = out.intercept;
    return out;
  }
  out.slope_sign = measured_slope_sign(aw);
  out.shift = out.intercept + out.slope_sign * out.slope_magnitude * alpha;
  return out;
}

double solve_alpha_for_shift(const WeakValue& aw, double target) {
  const PredictedShift law = predicted_shift_arbitrary(aw, 0.0);
  if (law.slope_magnitude == 0.0) {
    throw TrivialWeakValue(
        "A_w = +-1: every probe gives the same shift, no alpha can reach " +
        std::to_string(target));
  }
  return (target - law.intercept) /
         (law.slope_sign * law.slope_magnitude);
}

}  // namespace wva

// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
// Exit code 0 iff every criterion holds at its stated tolerance.
//
// Each criterion re-derives its expectations from closed forms or
// independent constructions; none of them consults the claim suite's own
// verdicts.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <limits>
#include <string>
#include <vector>

#include "wva/fourier.hpp"
#include "wva/lerch.hpp"
#include "wva/model.hpp"
#include "wva/probes.hpp"
#include "wva/quadrature.hpp"
#include "wva/table.hpp"
#include "test_support.hpp"

namespace {

using wva::complexd;
using wva::Interval;
using wva::WeakValue;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Pinned tolerances, one named constant per criterion clause.
constexpr double kTolShiftLimits = 1e-3;      // weak / strong probe shifts
constexpr double kTolShiftClaim = 1e-8;       // optimal-claim probe shift
constexpr double kTolReconstruction = 1e-8;   // transform vs closed form
constexpr double kTolEvenSum = 1e-6;          // discrete even-point sum
constexpr double kTolParseval = 1e-3;         // windowed position norm
constexpr double kTolAffineResidual = 1e-6;   // affine-law fit residual
constexpr double kTolInterceptRel = 1e-6;     // affine intercept, relative
constexpr double kTolSlopeRel = 1e-4;         // affine |slope|, relative
constexpr double kTolRoundTrip = 1e-3;        // solve-alpha round trips
constexpr double kTolUnitShift = 1e-8;        // weak value +-1 universality
constexpr double kTolVariationalResidual = 1e-8;
constexpr double kMinClaimResidual = 1e-2;    // optimal-claim probe residual
constexpr double kMinSignIntegral = 0.4;      // zero-free interval
constexpr double kTolSignCancellation = 1e-9; // straddling interval
constexpr double kTolSignRoot = 1e-6;         // cancellation root location
constexpr double kTolRegularizedRel = 0.05;   // epsilon-ladder endpoint
constexpr double kTolCrossRepSsh = 1e-3;      // k-mean vs x-mean, 1/B probe
constexpr double kTolCrossRepGauss = 1e-6;    // k-mean vs x-mean, gaussian
constexpr double kTolGauge = 1e-9;
constexpr double kTolBoundaryIdentity = 1e-10;
constexpr double kTolKernelDerivative = 1e-8;
constexpr double kTolLerchRecurrence = 1e-12;
constexpr double kTolPeriodIntegralRel = 1e-9;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

wva::QuadratureConfig default_quad() { return wva::QuadratureConfig{}; }

wva::WaveFunctionValue probe_wave(const wva::ProbeSpec& probe, double k) {
  const wva::ProbeEval e = probe.evaluate(k);
  return wva::WaveFunctionValue{e.value, e.derivative};
}

// ---------------------------------------------------------------------------
// 1. At theta = 2 pi/3 the narrow-probe, wide-probe and optimal-claim shifts
//    reproduce tan(theta/2), sin(theta) and 1/sin(theta); across (pi/2, pi)
//    the ordering strong <= claim <= weak holds pointwise.
void criterion_1() {
  const wva::QuadratureConfig quad = default_quad();
  const WeakValue aw = wva::weak_value_spin({2.0 * kPi / 3.0});

  const double d_weak =
      wva::pointer_shift(wva::ProbeSpec::gaussian(aw, 0.01, 0.0), aw, quad)
          .shift;
  const double d_strong =
      wva::pointer_shift(wva::ProbeSpec::gaussian(aw, 100.0, 0.0), aw, quad)
          .shift;
  const double d_claim =
      wva::pointer_shift(wva::ProbeSpec::ssh_optimal(aw), aw, quad).shift;

  const double dev_weak = std::abs(d_weak - wva::shift_weak(aw));
  const double dev_strong = std::abs(d_strong - wva::shift_strong(aw));
  const double dev_claim = std::abs(d_claim - wva::shift_ssh_claimed(aw));

  bool ordering = true;
  for (int j = 1; j <= 20; ++j) {
    const double theta =
        kPi / 2.0 + static_cast<double>(j) * (kPi / 2.0) / 21.0;
    const WeakValue awj = wva::weak_value_spin({theta});
    const double w =
        wva::pointer_shift(wva::ProbeSpec::gaussian(awj, 0.01, 0.0), awj, quad)
            .shift;
    const double s =
        wva::pointer_shift(wva::ProbeSpec::gaussian(awj, 100.0, 0.0), awj,
                           quad)
            .shift;
    const double c =
        wva::pointer_shift(wva::ProbeSpec::ssh_optimal(awj), awj, quad).shift;
    ordering = ordering && (s <= c) && (c <= w);
  }

  const bool ok = dev_weak < kTolShiftLimits && dev_strong < kTolShiftLimits &&
                  dev_claim < kTolShiftClaim && ordering;
  report(1, ok,
         "theta=2pi/3 probe shifts " + fmt(d_weak) + "/" + fmt(d_claim) + "/" +
             fmt(d_strong) + " match tan(theta/2), 1/sin, sin (dev " +
             fmt(dev_weak) + "/" + fmt(dev_claim) + "/" + fmt(dev_strong) +
             "); ordering strong<=claim<=weak at 20 angles " +
             (ordering ? "holds" : "VIOLATED"));
}

// ---------------------------------------------------------------------------
// 2. The numeric transform of the optimal-claim probe reproduces the Lerch
//    closed form xi0 at twelve offsets from the probe center, integer and
//    non-integer alike.
void criterion_2() {
  const WeakValue aw(complexd(std::sqrt(3.0), 0.0));
  const wva::ProbeSpec probe = wva::ProbeSpec::ssh_optimal(aw);
  const double xf = wva::shift_ssh_claimed(aw);

  std::vector<double> offsets = {-4.0, -3.5, -2.0, -1.7, -1.0, -0.3,
                                 0.0,  0.7,  1.9,  2.0,  4.2,  5.0};
  std::sort(offsets.begin(), offsets.end());
  std::vector<double> grid;
  grid.reserve(offsets.size());
  for (double t : offsets) grid.push_back(xf + t);

  const wva::WaveFunctionTable table =
      wva::transform_to_position(probe, grid, default_quad());

  double worst = 0.0;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const complexd expected = wva::xi0_lerch(aw, offsets[i]);
    worst = std::max(worst, std::abs(table.amplitudes[i] - expected));
  }
  const bool ok = worst < kTolReconstruction;
  report(2, ok,
         "transform of the optimal-claim probe matches the Lerch closed form "
         "at 12 points (6 integer, 6 non-integer); max deviation " +
             fmt(worst));
}

// ---------------------------------------------------------------------------
// 3. The even-integer samples of the position density sum to 1/2 while the
//    density itself integrates to 1, for five weak values (one complex pair
//    with either sign of the real part, one near-degenerate).
void criterion_3() {
  const std::vector<complexd> weak_values = {{std::sqrt(3.0), 0.0},
                                             {0.3, 0.4},
                                             {0.999, 0.0},
                                             {2.5, -1.2},
                                             {-0.8, 0.3}};
  const int n_max = 60;
  const double step = 0.25;
  const wva::QuadratureConfig quad = default_quad();

  double worst_sum = 0.0;
  double worst_parseval = 0.0;
  bool ok = true;
  for (const complexd& awc : weak_values) {
    const WeakValue aw(awc);
    const wva::DiscreteSumResult s = wva::discrete_even_sum(aw, n_max);
    const double dev_sum = std::abs(s.sum + s.tail_estimate - 0.5);
    worst_sum = std::max(worst_sum, dev_sum);

    // Window sized so the un-captured 1/x^2 tail mass stays below half the
    // Parseval tolerance: tail ~ 2|Re A|/(pi^2 |A|^2 w).
    const double w_raw = std::max(
        200.0, 2.0 * aw.abs_re() / (kPi * kPi * aw.abs_sq() * 4.5e-4));
    const double half_width = std::ceil(w_raw / step) * step;
    const double center = wva::shift_ssh_claimed(aw);

    const wva::ProbeSpec probe = wva::ProbeSpec::ssh_optimal(aw);
    const int n_pts = static_cast<int>(std::lround(2.0 * half_width / step));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n_pts) + 1);
    for (int i = 0; i <= n_pts; ++i) {
      grid.push_back(center - half_width + step * static_cast<double>(i));
    }
    const double parseval =
        wva::transform_to_position(probe, grid, quad).trapezoid_norm();
    const double dev_parseval = std::abs(parseval - 1.0);
    worst_parseval = std::max(worst_parseval, dev_parseval);

    ok = ok && dev_sum < kTolEvenSum && dev_parseval < kTolParseval;
  }
  report(3, ok,
         "5 weak values: even-point sums reach 1/2 (max dev " +
             fmt(worst_sum) + "), position densities integrate to 1 (max dev " +
             fmt(worst_parseval) + ")");
}

// ---------------------------------------------------------------------------
// 4. The shift of the arbitrary-shift family is affine in alpha with the
//    closed-form intercept and slope magnitude, and the inverse solve
//    round-trips distant targets.
void criterion_4() {
  const WeakValue aw(complexd(std::sqrt(3.0), 0.0));
  const wva::QuadratureConfig quad = default_quad();
  const int n = 8;

  std::vector<double> alphas;
  std::vector<double> shifts;
  for (int i = 0; i < 9; ++i) {
    const double a = -2.0 + 0.5 * static_cast<double>(i);
    alphas.push_back(a);
    shifts.push_back(
        wva::pointer_shift(wva::ProbeSpec::arbitrary_shift(aw, a, n), aw, quad)
            .shift);
  }

  // Least-squares affine fit.
  double mean_a = 0.0;
  double mean_d = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    mean_a += alphas[i];
    mean_d += shifts[i];
  }
  mean_a /= static_cast<double>(alphas.size());
  mean_d /= static_cast<double>(alphas.size());
  double cov = 0.0;
  double var = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    cov += (alphas[i] - mean_a) * (shifts[i] - mean_d);
    var += (alphas[i] - mean_a) * (alphas[i] - mean_a);
  }
  const double slope = cov / var;
  const double intercept = mean_d - slope * mean_a;
  double residual = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    residual = std::max(residual,
                        std::abs(shifts[i] - (intercept + slope * alphas[i])));
  }

  const double intercept_expected = wva::shift_ssh_claimed(aw);
  const double slope_expected =
      ((1.0 - aw.abs_re()) * (1.0 - aw.abs_re()) + aw.im() * aw.im()) /
      (2.0 * aw.re() * aw.re());
  const double dev_intercept =
      std::abs(intercept - intercept_expected) / intercept_expected;
  const double dev_slope =
      std::abs(std::abs(slope) - slope_expected) / slope_expected;

  bool round_trips = true;
  double worst_round_trip = 0.0;
  for (double target : {-5.0, 3.0, 10.0}) {
    const double a = wva::solve_alpha_for_shift(aw, target);
    const double realized =
        wva::pointer_shift(wva::ProbeSpec::arbitrary_shift(aw, a, 16), aw,
                           quad)
            .shift;
    worst_round_trip = std::max(worst_round_trip, std::abs(realized - target));
    round_trips = round_trips && std::abs(realized - target) < kTolRoundTrip;
  }

  const bool ok = residual < kTolAffineResidual &&
                  dev_intercept < kTolInterceptRel &&
                  dev_slope < kTolSlopeRel && round_trips;
  report(4, ok,
         "alpha-scan affine with residual " + fmt(residual) +
             ", intercept/|slope| rel dev " + fmt(dev_intercept) + "/" +
             fmt(dev_slope) + ", round trips to {-5,3,10} within " +
             fmt(worst_round_trip) + " (slope sign " +
             (slope < 0.0 ? "-1" : "+1") + " recorded, not asserted)");
}

// ---------------------------------------------------------------------------
// 5. Weak value +-1 pins the pointer shift at +-1 for every preparation:
//    ten seeded random tabulated probes per sign.
void criterion_5() {
  const wva::QuadratureConfig quad = default_quad();
  const int cases_per_sign = 10;
  const int n_samples = 512;
  const Interval iv = wva::make_interval(-kPi / 2.0, kPi / 2.0);

  const auto splitmix64 = [](std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  const auto uniform_pm1 = [&splitmix64](std::uint64_t& state) {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  };

  double worst = 0.0;
  for (int sign : {+1, -1}) {
    const WeakValue aw(complexd(static_cast<double>(sign), 0.0));
    for (int c = 0; c < cases_per_sign; ++c) {
      std::uint64_t state = 20240817ull +
                            1000ull * (sign > 0 ? 1ull : 2ull) +
                            static_cast<std::uint64_t>(c);
      std::vector<complexd> raw(n_samples);
      for (auto& v : raw) {
        const double re = uniform_pm1(state);
        const double im = uniform_pm1(state);
        v = complexd(re, im);
      }
      std::vector<complexd> smooth(n_samples);
      for (int i = 0; i < n_samples; ++i) {
        const complexd left = raw[static_cast<std::size_t>(std::max(0, i - 1))];
        const complexd right =
            raw[static_cast<std::size_t>(std::min(n_samples - 1, i + 1))];
        smooth[static_cast<std::size_t>(i)] =
            (left + raw[static_cast<std::size_t>(i)] + right) / 3.0;
      }
      wva::WaveFunctionTable table;
      table.representation = wva::WaveFunctionTable::Representation::momentum;
      table.grid.resize(n_samples);
      for (int i = 0; i < n_samples; ++i) {
        table.grid[static_cast<std::size_t>(i)] =
            iv.k_minus + iv.width() * static_cast<double>(i) /
                             static_cast<double>(n_samples - 1);
      }
      table.amplitudes = smooth;
      table.norm_estimate = table.trapezoid_norm();

      const wva::ProbeSpec probe = wva::ProbeSpec::tabulated(aw, table);
      const double shift = wva::pointer_shift(probe, aw, quad).shift;
      worst = std::max(worst, std::abs(shift - static_cast<double>(sign)));
    }
  }
  const bool ok = worst < kTolUnitShift;
  report(5, ok,
         "weak value +-1 with 10 random probes each: shift +-1 in all 20 "
         "cases, max deviation " +
             fmt(worst));
}

// ---------------------------------------------------------------------------
// 6. The variational probe satisfies the corrected stationarity equation
//    pointwise to near machine precision; the optimal-claim probe leaves an
//    O(1) residual for a complex weak value.
void criterion_6() {
  const Interval iv = wva::make_interval(-kPi / 2.0, kPi / 2.0);
  const int n_points = 200;
  const double exclusion = 1e-3;

  const auto residual = [](const WeakValue& aw, const wva::ProbeSpec& probe,
                           double x_f, double x_i, double mbar, double k) {
    const wva::KernelValue kv = wva::kernel(aw, k);
    const wva::ProbeEval pe = probe.evaluate(k);
    const double d = kv.b_abs_sq - mbar;
    const complexd bracket = kv.b_star_bprime +
                             complexd(0.0, x_f) * kv.b_abs_sq -
                             complexd(0.0, x_i) * mbar;
    return std::abs(d * pe.derivative + bracket * pe.value);
  };

  struct Case {
    complexd aw;
    double m;
    double target;
  };
  const std::vector<Case> cases = {{{std::sqrt(3.0), 0.0}, 2.25, 3.0},
                                   {{2.0, 1.0}, 2.0, 2.0}};

  double worst_var = 0.0;
  for (const Case& c : cases) {
    const WeakValue aw(c.aw);
    const wva::ProbeSpec var =
        wva::ProbeSpec::variational(aw, c.m, c.target, iv);
    const std::vector<double>& zeros = var.singular_points();
    for (int j = 0; j < n_points; ++j) {
      const double k =
          iv.k_minus + iv.width() * (j + 0.5) / static_cast<double>(n_points);
      bool near = false;
      for (double z : zeros) {
        if (std::abs(k - z) < exclusion) near = true;
      }
      if (near) continue;
      // Construction gauge: final mean 0, initial mean -target.
      worst_var =
          std::max(worst_var, residual(aw, var, 0.0, -c.target, c.m, k));
    }
  }

  // The optimal-claim probe, judged with its own realized expectation
  // values so the failure cannot be blamed on parameter choice.
  const WeakValue aw_c(complexd(2.0, 1.0));
  const wva::ProbeSpec claim = wva::ProbeSpec::ssh_optimal(aw_c);
  const wva::ShiftReport rep =
      wva::pointer_shift(claim, aw_c, default_quad());
  double max_claim = 0.0;
  for (int j = 0; j < n_points; ++j) {
    const double k =
        iv.k_minus + iv.width() * (j + 0.5) / static_cast<double>(n_points);
    max_claim = std::max(
        max_claim, residual(aw_c, claim, rep.mean_final, rep.mean_initial,
                            rep.mean_kernel_norm, k));
  }

  const bool ok =
      worst_var < kTolVariationalResidual && max_claim > kMinClaimResidual;
  report(6, ok,
         "variational stationarity residual " + fmt(worst_var) +
             " over 2 weak values x 200 points; optimal-claim probe residual " +
             fmt(max_claim) + " (nonzero as required)");
}

// ---------------------------------------------------------------------------
// 7. The sign integral of D = |B|^2 - m stays bounded away from zero on an
//    interval free of zeros of D, cancels over the symmetric interval that
//    straddles both zeros, and the cancellation root sits at b = pi/2.
void criterion_7() {
  const WeakValue aw(complexd(std::sqrt(3.0), 0.0));
  const double m = 2.0;
  const wva::QuadratureConfig quad = default_quad();

  const auto sign_d = [&aw, m](double k) {
    const double d = wva::kernel_abs_sq(aw, k) - m;
    return complexd(d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0), 0.0);
  };
  const auto sign_integral = [&](double lo, double hi) {
    const Interval window = wva::make_interval(lo, hi);
    const std::vector<double> crossings =
        wva::kernel_norm_crossings(aw, m, window);
    return wva::integrate(sign_d, window, quad, crossings).value.real();
  };

  const double zero_free = sign_integral(0.1, 0.6);
  const double straddling = sign_integral(-kPi / 2.0, kPi / 2.0);

  // Root of b -> integral of sign(D) over [-b, b]; the integral is negative
  // for b < pi/2 and positive beyond, so a bracketing bisection converges to
  // the cancellation half-width.
  double lo = 1.0;
  double hi = 2.0;
  double f_lo = sign_integral(-lo, lo);
  double root = std::numeric_limits<double>::quiet_NaN();
  if (f_lo < 0.0 && sign_integral(-hi, hi) > 0.0) {
    for (int it = 0; it < 60 && (hi - lo) > 1e-9; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = sign_integral(-mid, mid);
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    root = 0.5 * (lo + hi);
  }

  const bool ok = std::abs(zero_free) > kMinSignIntegral &&
                  std::abs(straddling) < kTolSignCancellation &&
                  std::isfinite(root) && std::abs(root - kPi / 2.0) < kTolSignRoot;
  report(7, ok,
         "sign integral " + fmt(zero_free) +
             " on the zero-free interval [0.1,0.6], " + fmt(straddling) +
             " over [-pi/2,pi/2]; cancellation root at b=" + fmt(root) +
             " (pi/2 within " + fmt(std::abs(root - kPi / 2.0)) + ")");
}

// ---------------------------------------------------------------------------
// 8. Shrinking the exclusion radius around the variational probe's
//    singularities drives the realized shift monotonically to the
//    prescribed target.
void criterion_8() {
  const WeakValue aw(complexd(std::sqrt(3.0), 0.0));
  const Interval iv = wva::make_interval(-kPi / 2.0, kPi / 2.0);
  const double target = 3.0;
  const wva::ProbeSpec probe =
      wva::ProbeSpec::variational(aw, 2.25, target, iv);

  std::vector<double> deviations;
  std::string trend;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    wva::QuadratureConfig quad = default_quad();
    quad.singularity_epsilon = eps;
    const double shift = wva::pointer_shift(probe, aw, quad).shift;
    deviations.push_back(std::abs(shift - target));
    trend += (trend.empty() ? "" : " -> ") + fmt(shift);
  }

  const bool monotone =
      deviations[1] < deviations[0] && deviations[2] < deviations[1];
  const bool close = deviations[2] < kTolRegularizedRel * std::abs(target);
  report(8, monotone && close,
         "regularized shift " + trend + " approaches the prescribed 3 "
         "monotonically; final deviation " +
             fmt(deviations[2]) + " (" +
             fmt(100.0 * deviations[2] / std::abs(target)) + "%)");
}

// ---------------------------------------------------------------------------
// 9. The mean position computed in momentum space agrees with the windowed
//    mean of the transformed position density.
void criterion_9() {
  const wva::QuadratureConfig quad = default_quad();
  bool ok = true;
  std::string detail;

  {
    const WeakValue aw(complexd(std::sqrt(3.0), 0.0));
    const wva::ProbeSpec probe = wva::ProbeSpec::ssh_optimal(aw);
    const wva::MeanResult km = wva::mean_position(
        [&probe](double k) { return probe_wave(probe, k); }, probe.support(),
        quad);
    const double half_width = 256.0;
    const double step = 0.25;
    std::vector<double> grid;
    const int n_pts = static_cast<int>(std::lround(2.0 * half_width / step));
    for (int i = 0; i <= n_pts; ++i) {
      grid.push_back(km.mean - half_width + step * static_cast<double>(i));
    }
    const wva::WaveFunctionTable table =
        wva::transform_to_position(probe, grid, quad);
    const double xmean = wva::position_mean(table, km.mean, half_width);
    const double dev = std::abs(xmean - km.mean);
    ok = ok && dev < kTolCrossRepSsh;
    detail += "optimal-claim probe dev " + fmt(dev);
  }

  double worst_gauss = 0.0;
  for (const auto& [width, center] :
       std::vector<std::pair<double, double>>{{0.5, 1.25}, {1.2, -0.75}}) {
    const WeakValue aw(complexd(1.0, 0.0));
    const wva::ProbeSpec probe = wva::ProbeSpec::gaussian(aw, width, center);
    const wva::MeanResult km = wva::mean_position(
        [&probe](double k) { return probe_wave(probe, k); }, probe.support(),
        quad);
    std::vector<double> grid;
    for (int i = 0; i <= 400; ++i) {
      grid.push_back(km.mean - 10.0 + 0.05 * static_cast<double>(i));
    }
    const wva::WaveFunctionTable table =
        wva::transform_to_position(probe, grid, quad);
    const double xmean = wva::position_mean(table, km.mean, 10.0);
    worst_gauss = std::max(worst_gauss, std::abs(xmean - km.mean));
  }
  ok = ok && worst_gauss < kTolCrossRepGauss;
  detail += ", gaussian probes max dev " + fmt(worst_gauss);

  report(9, ok, "momentum-space and windowed position-space means agree: " +
                    detail);
}

// ---------------------------------------------------------------------------
// 10. Randomized invariants: gauge covariance of the means, the boundary
//     identity of the moment integrand, the kernel derivative identity, the
//     Lerch recurrence, and the closed-form period integrals.
void criterion_10() {
  const wva::QuadratureConfig quad = default_quad();
  bool ok = true;
  std::string detail;

  // Gauge covariance: multiplying by C e^{i x0 k} moves both means by -x0
  // and leaves the shift unchanged.
  {
    auto rng = test_support::make_rng(4001);
    double worst_mean = 0.0;
    double worst_shift = 0.0;
    for (int i = 0; i < 20; ++i) {
      const WeakValue aw = test_support::random_weak_value(rng);
      const test_support::SmoothWave wave = test_support::random_smooth_wave(rng);
      const double x0 = test_support::uniform(rng, -3.0, 3.0);
      const complexd c_factor(test_support::uniform(rng, 0.5, 2.0),
                              test_support::uniform(rng, -1.0, 1.0));
      const double lo = test_support::uniform(rng, -2.0, -0.5);
      const Interval iv =
          wva::make_interval(lo, lo + test_support::uniform(rng, 1.0, 3.0));

      const auto base = [&wave](double k) { return wave(k); };
      const auto gauged = [&wave, x0, c_factor](double k) {
        const wva::WaveFunctionValue v = wave(k);
        const complexd phase =
            c_factor * std::exp(complexd(0.0, x0 * k));
        return wva::WaveFunctionValue{
            phase * v.value,
            phase * (complexd(0.0, x0) * v.value + v.derivative)};
      };
      const auto final_of = [&aw](const wva::WaveFunction& xi) {
        return [&aw, xi](double k) {
          const wva::WaveFunctionValue v = xi(k);
          const complexd b = wva::kernel_b(aw, k);
          const complexd bp = wva::kernel_b_prime(aw, k);
          return wva::WaveFunctionValue{b * v.value,
                                        bp * v.value + b * v.derivative};
        };
      };

      const wva::MeanResult mi = wva::mean_position(base, iv, quad);
      const wva::MeanResult mf = wva::mean_position(final_of(base), iv, quad);
      const wva::MeanResult gi = wva::mean_position(gauged, iv, quad);
      const wva::MeanResult gf =
          wva::mean_position(final_of(gauged), iv, quad);

      worst_mean = std::max(worst_mean, std::abs(gi.mean - (mi.mean - x0)));
      worst_mean = std::max(worst_mean, std::abs(gf.mean - (mf.mean - x0)));
      worst_shift = std::max(
          worst_shift,
          std::abs((gf.mean - gi.mean) - (mf.mean - mi.mean)));
    }
    ok = ok && worst_mean < kTolGauge && worst_shift < kTolGauge;
    detail += "gauge " + fmt(std::max(worst_mean, worst_shift));
  }

  // Boundary identity: Re integral xi* xi' equals the half-difference of
  // |xi|^2 at the ends, checked internally by mean_position.
  {
    auto rng = test_support::make_rng(4002);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const test_support::SmoothWave wave = test_support::random_smooth_wave(rng);
      const double lo = test_support::uniform(rng, -2.0, -0.5);
      const Interval iv =
          wva::make_interval(lo, lo + test_support::uniform(rng, 1.0, 3.0));
      const wva::MeanResult mr = wva::mean_position(
          [&wave](double k) { return wave(k); }, iv, quad);
      worst = std::max(worst, mr.boundary_identity_residual);
    }
    ok = ok && worst < kTolBoundaryIdentity;
    detail += ", boundary " + fmt(worst);
  }

  // Kernel derivative identity: 2 Re(B* B') = d|B|^2/dk.
  {
    auto rng = test_support::make_rng(4003);
    double worst = 0.0;
    const double h = 1e-6;
    for (int i = 0; i < 64; ++i) {
      const WeakValue aw = test_support::random_weak_value(rng);
      const double k = test_support::uniform(rng, -5.0, 5.0);
      const double fd = (wva::kernel_abs_sq(aw, k + h) -
                         wva::kernel_abs_sq(aw, k - h)) /
                        (2.0 * h);
      const double analytic = 2.0 * wva::kernel(aw, k).b_star_bprime.real();
      worst = std::max(worst, std::abs(fd - analytic));
    }
    ok = ok && worst < kTolKernelDerivative;
    detail += ", kernel-derivative " + fmt(worst);
  }

  // Lerch recurrence Phi(z,1,x) = 1/x + z Phi(z,1,x+1).
  {
    auto rng = test_support::make_rng(4004);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double r = test_support::uniform(rng, 0.0, 0.95);
      const double phi = test_support::uniform(rng, 0.0, 2.0 * kPi);
      const complexd z = r * std::exp(complexd(0.0, phi));
      const complexd x(test_support::uniform(rng, 0.05, 10.0),
                       test_support::uniform(rng, -5.0, 5.0));
      const complexd lhs = wva::lerch_phi(z, x, 1e-14).value;
      const complexd rhs =
          1.0 / x + z * wva::lerch_phi(z, x + 1.0, 1e-14).value;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    ok = ok && worst < kTolLerchRecurrence;
    detail += ", lerch " + fmt(worst);
  }

  // Period integrals of 1/|B|^2 and 1/|B|^4 over arbitrary-origin periods.
  {
    auto rng = test_support::make_rng(4005);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const WeakValue aw = test_support::random_weak_value(rng);
      const double t0 = test_support::uniform(rng, -3.0, 3.0);
      const Interval period = wva::make_interval(t0, t0 + kPi);
      const double i2 =
          wva::integrate(
              [&aw](double k) {
                return complexd(1.0 / wva::kernel_abs_sq(aw, k), 0.0);
              },
              period, quad)
              .value.real();
      const double i4 =
          wva::integrate(
              [&aw](double k) {
                const double b2 = wva::kernel_abs_sq(aw, k);
                return complexd(1.0 / (b2 * b2), 0.0);
              },
              period, quad)
              .value.real();
      worst = std::max(
          worst, std::abs(i2 - wva::period_integral_inv_b2(aw)) /
                     wva::period_integral_inv_b2(aw));
      worst = std::max(
          worst, std::abs(i4 - wva::period_integral_inv_b4(aw)) /
                     wva::period_integral_inv_b4(aw));
    }
    ok = ok && worst < kTolPeriodIntegralRel;
    detail += ", period-integrals " + fmt(worst);
  }

  report(10, ok, "randomized invariant suites (worst deviations): " + detail);
}

}  // namespace

int main() {
  std::printf("acceptance: 10 criteria\n");
  const std::vector<void (*)()> criteria = {
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i) + 1, false,
             std::string("unexpected exception: ") + e.what());
    }
  }
  std::printf("acceptance: %d/10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}

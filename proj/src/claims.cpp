#include "wva/claims.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "wva/errors.hpp"
#include "wva/fourier.hpp"
#include "wva/model.hpp"
#include "wva/probes.hpp"
#include "wva/table.hpp"

namespace wva {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_value(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// Writes a CSV evidence file and returns its path.  One row per entry,
// 17 significant digits, no timestamps (runs must be byte-reproducible).
std::string write_csv(const ClaimConfig& cfg, const std::string& name,
                      const std::string& header,
                      const std::vector<std::vector<double>>& rows) {
  std::filesystem::create_directories(cfg.out_dir);
  const std::string path =
      (std::filesystem::path(cfg.out_dir) / name).string();
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open evidence file for writing: " + path);
  }
  out << header << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ",";
      out << format_value(row[i]);
    }
    out << "\n";
  }
  return path;
}

// splitmix64: tiny deterministic generator for the random-probe claim; the
// stream is fully determined by the recorded seed, independent of platform.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform_pm1(std::uint64_t& state) {
  const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

struct Check {
  bool ok = true;
  void require(bool condition) { ok = ok && condition; }
};

// ---------------------------------------------------------------------------
// C1: the closed-form momentum profile transforms to a position density that
// integrates to one, and whose even-integer samples sum to one half.
ClaimResult claim_c1(const ClaimConfig& cfg) {
  ClaimResult res;
  res.id = "C1";
  res.description =
      "position density of the optimal-claim probe integrates to 1 and its "
      "even-integer samples sum to 1/2";
  res.tolerance = 1e-3;

  const std::vector<complexd> weak_values = {
      {std::sqrt(3.0), 0.0}, {0.3, 0.4}, {0.999, 0.0}, {2.5, -1.2},
      {-0.8, 0.3}};
  const int n_max = 60;
  const double step = 0.25;

  std::vector<std::vector<double>> rows;
  Check check;
  double worst_sum = 0.0;
  double worst_parseval = 0.0;
  for (const auto& awc : weak_values) {
    const WeakValue aw(awc);
    const DiscreteSumResult s = discrete_even_sum(aw, n_max);
    const double corrected = s.sum + s.tail_estimate;
    const double dev_sum = std::abs(corrected - 0.5);

    // Window wide enough that the un-captured 1/x^2 tail mass stays below
    // half the Parseval tolerance: tail ~ 2|Re A|/(pi^2 |A|^2 w).
    const double abs_re = aw.abs_re();
    const double w_raw = std::max(
        200.0, 2.0 * abs_re / (kPi * kPi * aw.abs_sq() * 4.5e-4));
    const double half_width = std::ceil(w_raw / step) * step;
    const double center = shift_ssh_claimed(aw);

    const ProbeSpec probe = ProbeSpec::ssh_optimal(aw);
    std::vector<double> grid;
    const int n_pts = static_cast<int>(std::lround(2.0 * half_width / step));
    grid.reserve(static_cast<std::size_t>(n_pts) + 1);
    for (int i = 0; i <= n_pts; ++i) {
      grid.push_back(center - half_width + step * static_cast<double>(i));
    }
    const WaveFunctionTable table =
        transform_to_position(probe, grid, cfg.quad);
    const double parseval = table.trapezoid_norm();

    const Interval support = probe.support();
    const IntegralResult norm_k = integrate(
        [&probe](double k) {
          const ProbeEval pe = probe.evaluate(k);
          return complexd(std::norm(pe.value), 0.0);
        },
        support, cfg.quad);
    const double dev_parseval = std::abs(parseval - norm_k.value.real());

    worst_sum = std::max(worst_sum, dev_sum);
    worst_parseval = std::max(worst_parseval, dev_parseval);
    check.require(dev_sum <= 1e-6);
    check.require(dev_parseval <= 1e-3);
    rows.push_back({awc.real(), awc.imag(), s.sum, s.tail_estimate, corrected,
                    dev_sum, half_width, parseval, norm_k.value.real(),
                    dev_parseval});
  }

  res.artifacts.push_back(write_csv(
      cfg, "c1_normalization.csv",
      "aw_re,aw_im,even_sum,tail_estimate,even_sum_corrected,even_sum_dev,"
      "window_half_width(q/g),parseval_integral,momentum_norm,parseval_dev",
      rows));
  res.computed.push_back({"max_even_sum_deviation", worst_sum});
  res.computed.push_back({"max_parseval_deviation", worst_parseval});
  res.references.push_back({"even_sum", 0.5, "published-value"});
  res.references.push_back({"parseval_integral", 1.0, "definition"});
  res.notes.push_back(
      "even-integer sum uses the tail estimate of discrete_even_sum; the raw "
      "partial sum at n_max=60 sits ~1e-3 below 1/2, as the 1/n^2 tail "
      "predicts");
  res.verdict = check.ok ? Verdict::pass : Verdict::fail;
  return res;
}

// ---------------------------------------------------------------------------
// C2: spin-scenario ordering of the three pointer shifts, and agreement of
// each measured shift with its closed form.
ClaimResult claim_c2(const ClaimConfig& cfg) {
  ClaimResult res;
  res.id = "C2";
  res.description =
      "for post-selection angles in (pi/2, pi) the weak-probe shift exceeds "
      "the optimal-claim shift, which exceeds the strong-probe shift";
  res.tolerance = 1e-3;

  // Width of the weak Gaussian per angle: the leading bias of the weak limit
  // scales like Re A (|A|^2 - 1) W^2, so shrink W where the weak value is
  // large but never below what quadrature resolves comfortably.
  const auto weak_width = [](const WeakValue& aw) {
    const double growth = aw.abs_re() * (aw.abs_sq() - 1.0);
    if (growth <= 0.0) return 0.01;
    return std::min(0.01, std::sqrt(2.5e-4 / growth));
  };

  const std::vector<double> named = {1.6, 2.0, 2.0 * kPi / 3.0, 2.8};
  std::vector<double> grid;
  for (int j = 1; j <= 20; ++j) {
    grid.push_back(kPi / 2.0 + (kPi / 2.0) * static_cast<double>(j) / 21.0);
  }

  Check check;
  double worst_closed = 0.0;
  std::vector<std::vector<double>> rows;
  const auto measure = [&](double theta, bool check_closed) {
    const WeakValue aw = weak_value_spin(SpinScenario{theta});
    const ProbeSpec weak = ProbeSpec::gaussian(aw, weak_width(aw), 0.0);
    const ProbeSpec strong = ProbeSpec::gaussian(aw, 100.0, 0.0);
    const ProbeSpec claim = ProbeSpec::ssh_optimal(aw);
    const ShiftReport r_weak = pointer_shift(weak, aw, cfg.quad);
    const ShiftReport r_strong = pointer_shift(strong, aw, cfg.quad);
    const ShiftReport r_claim = pointer_shift(claim, aw, cfg.quad);

    const double c_weak = shift_weak(aw);
    const double c_strong = shift_strong(aw);
    const double c_claim = shift_ssh_claimed(aw);
    if (check_closed) {
      const double d1 = std::abs(r_weak.shift - c_weak);
      const double d2 = std::abs(r_strong.shift - c_strong);
      const double d3 = std::abs(r_claim.shift - c_claim);
      worst_closed = std::max({worst_closed, d1, d2, d3});
      check.require(d1 <= 1e-3 && d2 <= 1e-3 && d3 <= 1e-3);
    }
    // Ordering asserted on the measured values; the gaps are O(1) so the
    // quadrature error cannot flip them.
    check.require(r_weak.shift >= r_claim.shift);
    check.require(r_claim.shift >= r_strong.shift);
    rows.push_back({theta, r_weak.shift, c_weak, r_claim.shift, c_claim,
                    r_strong.shift, c_strong});
  };

  for (double theta : named) measure(theta, true);
  for (double theta : grid) measure(theta, false);

  res.artifacts.push_back(write_csv(
      cfg, "c2_ordering.csv",
      "theta(rad),shift_weak_probe(q/g),closed_weak(q/g),"
      "shift_claim_probe(q/g),closed_claim(q/g),shift_strong_probe(q/g),"
      "closed_strong(q/g)",
      rows));
  res.computed.push_back({"max_closed_form_deviation", worst_closed});
  res.references.push_back({"closed_form_deviation", 0.0, "closed-form"});
  res.notes.push_back(
      "ordering checked on 4 named angles plus a 20-point grid over "
      "(pi/2, pi); closed-form agreement checked on the named angles");
  res.verdict = check.ok ? Verdict::pass : Verdict::fail;
  return res;
}

// ---------------------------------------------------------------------------
// C3: the arbitrary-shift family obeys an affine law in alpha and reaches any
// prescribed shift.
ClaimResult claim_c3(const ClaimConfig& cfg) {
  ClaimResult res;
  res.id = "C3";
  res.description =
      "pointer shift of the arbitrary-shift family is affine in alpha and "
      "solves the prescription problem for any target";
  res.tolerance = 1e-6;

  const WeakValue aw(complexd(std::sqrt(3.0), 0.0));
  const int n_scan = 8;

  std::vector<double> alphas;
  for (int j = 0; j <= 8; ++j) alphas.push_back(-2.0 + 0.5 * j);

  std::vector<double> shifts;
  for (double alpha : alphas) {
    const ProbeSpec probe = ProbeSpec::arbitrary_shift(aw, alpha, n_scan);
    shifts.push_back(pointer_shift(probe, aw, cfg.quad).shift);
  }

  // Least-squares affine fit.
  const auto n = static_cast<double>(alphas.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    sx += alphas[i];
    sy += shifts[i];
    sxx += alphas[i] * alphas[i];
    sxy += alphas[i] * shifts[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;

  Check check;
  double max_residual = 0.0;
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double fit = intercept + slope * alphas[i];
    const double residual = std::abs(shifts[i] - fit);
    max_residual = std::max(max_residual, residual);
    check.require(residual <= 1e-6 * (1.0 + std::abs(shifts[i])));
    rows.push_back({alphas[i], shifts[i], fit, residual});
  }
  res.artifacts.push_back(
      write_csv(cfg, "c3_alpha_scan.csv",
                "alpha,shift(q/g),affine_fit(q/g),residual(q/g)", rows));

  const PredictedShift pred = predicted_shift_arbitrary(aw, 0.0);
  check.require(std::abs(intercept - pred.intercept) <=
                1e-6 * std::abs(pred.intercept));
  check.require(std::abs(std::abs(slope) - pred.slope_magnitude) <=
                1e-4 * pred.slope_magnitude);

  // Round trips: prescribe a target, solve for alpha, measure at a different
  // half-period count (the shift law does not depend on it).
  const std::vector<double> targets = {-5.0, 3.0, 10.0};
  std::vector<std::vector<double>> rt_rows;
  double worst_rt = 0.0;
  for (double target : targets) {
    const double alpha_star = solve_alpha_for_shift(aw, target);
    const ProbeSpec probe = ProbeSpec::arbitrary_shift(aw, alpha_star, 16);
    const double measured = pointer_shift(probe, aw, cfg.quad).shift;
    const double dev = std::abs(measured - target);
    worst_rt = std::max(worst_rt, dev);
    check.require(dev <= 1e-3);
    rt_rows.push_back({target, alpha_star, measured, dev});
  }
  res.artifacts.push_back(write_csv(
      cfg, "c3_round_trip.csv",
      "target_shift(q/g),alpha,measured_shift(q/g),deviation(q/g)", rt_rows));

  res.computed.push_back({"fit_intercept", intercept});
  res.computed.push_back({"fit_slope", slope});
  res.computed.push_back({"max_affine_residual", max_residual});
  res.computed.push_back({"max_round_trip_deviation", worst_rt});
  res.references.push_back(
      {"fit_intercept", pred.intercept, "closed-form"});
  res.references.push_back(
      {"fit_slope_magnitude", pred.slope_magnitude, "closed-form"});
  res.notes.push_back(
      "measured slope is negative; its magnitude matches the closed "
      "coefficient, so prescriptions solve for alpha with the measured sign");
  res.verdict = check.ok ? Verdict::pass : Verdict::fail;
  return res;
}

// ---------------------------------------------------------------------------
// C4: the variational probe satisfies the corrected stationarity equation to
// machine precision; the probe advertised as optimal does not satisfy it.
ClaimResult claim_c4(const ClaimConfig& cfg) {
  ClaimResult res;
  res.id = "C4";
  res.description =
      "variational probe solves the stationarity equation; the "
      "optimal-claim probe leaves an O(1) residual";
  res.tolerance = 1e-8;

  struct Case {
    complexd aw;
    double m;
    double target;
    std::string tag;
  };
  const std::vector<Case> cases = {
      {{std::sqrt(3.0), 0.0}, 2.25, 3.0, "real"},
      {{2.0, 1.0}, 2.0, 2.0, "complex"}};
  const Interval iv = make_interval(-kPi / 2.0, kPi / 2.0);
  const int n_points = 200;
  const double exclusion = 1e-3;

  // Stationarity residual  R(k) = D xi' + [u + i x_f |B|^2 - i x_i mbar] xi
  // with D = |B|^2 - mbar and u = conj(B) B'.
  const auto residual = [](const WeakValue& aw, const ProbeSpec& probe,
                           double x_f, double x_i, double mbar, double k) {
    const KernelValue kv = kernel(aw, k);
    const ProbeEval pe = probe.evaluate(k);
    const double d = kv.b_abs_sq - mbar;
    const complexd bracket = kv.b_star_bprime +
                             complexd(0.0, x_f) * kv.b_abs_sq -
                             complexd(0.0, x_i) * mbar;
    return d * pe.derivative + bracket * pe.value;
  };

  Check check;
  double worst_var = 0.0;
  double min_claim = std::numeric_limits<double>::infinity();
  for (const auto& c : cases) {
    const WeakValue aw(c.aw);
    const ProbeSpec var = ProbeSpec::variational(aw, c.m, c.target, iv);
    const ProbeSpec claim = ProbeSpec::ssh_optimal(aw);
    const std::vector<double> zeros = var.singular_points();

    // Construction parameters of the variational probe; the gauge places the
    // final mean at 0 so the initial mean carries the (negated) target.
    const double var_xf = 0.0;
    const double var_xi = -c.target;
    const double var_m = c.m;

    // Realized expectation values for the optimal-claim probe, measured.
    const ShiftReport rep = pointer_shift(claim, aw, cfg.quad);

    std::vector<std::vector<double>> rows;
    double max_var = 0.0;
    double max_claim_case = 0.0;
    for (int j = 0; j < n_points; ++j) {
      const double k = iv.k_minus + iv.width() * (j + 0.5) /
                                        static_cast<double>(n_points);
      bool near_zero = false;
      for (double z : zeros) {
        if (std::abs(k - z) < exclusion) near_zero = true;
      }
      const double r_claim = std::abs(residual(
          aw, claim, rep.mean_final, rep.mean_initial, rep.mean_kernel_norm,
          k));
      max_claim_case = std::max(max_claim_case, r_claim);
      double r_var = std::numeric_limits<double>::quiet_NaN();
      if (!near_zero) {
        r_var = std::abs(residual(aw, var, var_xf, var_xi, var_m, k));
        max_var = std::max(max_var, r_var);
      }
      rows.push_back({k, r_var, r_claim});
    }
    res.artifacts.push_back(write_csv(
        cfg, "c4_residuals_" + c.tag + ".csv",
        "k(g*p),abs_residual_variational,abs_residual_claim", rows));

    worst_var = std::max(worst_var, max_var);
    min_claim = std::min(min_claim, max_claim_case);
    check.require(max_var < 1e-8);
    check.require(max_claim_case > 1e-2);
  }

  res.computed.push_back({"max_variational_residual", worst_var});
  res.computed.push_back({"min_claim_probe_max_residual", min_claim});
  res.references.push_back({"variational_residual", 0.0, "closed-form"});
  res.notes.push_back(
      "variational residual evaluated with the construction parameters "
      "(final mean gauged to 0); points within 1e-3 of a kernel-norm "
      "crossing are excluded because the probe diverges there");
  res.notes.push_back(
      "optimal-claim residual evaluated with its own realized means and "
      "kernel norm, so the failure is not an artifact of parameter choice");
  res.verdict = check.ok ? Verdict::pass : Verdict::fail;
  return res;
}

// ---------------------------------------------------------------------------
// C5: weak value +-1 pins the shift at +-1 for every preparation.
ClaimResult claim_c5(const ClaimConfig& cfg) {
  ClaimResult res;
  res.id = "C5";
  res.description =
      "for weak value +1 or -1 the pointer shift equals +1 or -1 for any "
      "probe wave function";
  res.tolerance = 1e-8;

  const int cases_per_sign = 10;
  const int n_samples = 512;
  const Interval iv = make_interval(-kPi / 2.0, kPi / 2.0);

  Check check;
  double worst = 0.0;
  std::vector<std::vector<double>> rows;
  for (int sign : {+1, -1}) {
    const WeakValue aw(complexd(static_cast<double>(sign), 0.0));
    for (int c = 0; c < cases_per_sign; ++c) {
      const std::uint64_t seed =
          cfg.seed + 1000ull * static_cast<std::uint64_t>(sign > 0 ? 1 : 2) +
          static_cast<std::uint64_t>(c);
      std::uint64_t state = seed;
      std::vector<complexd> raw(n_samples);
      for (auto& v : raw) {
        const double re = uniform_pm1(state);
        const double im = uniform_pm1(state);
        v = complexd(re, im);
      }
      // One 3-point smoothing pass keeps the tabulated probe rough but
      // resolvable by the interpolant.
      std::vector<complexd> smooth(n_samples);
      for (int i = 0; i < n_samples; ++i) {
        const complexd left = raw[static_cast<std::size_t>(std::max(0, i - 1))];
        const complexd right =
            raw[static_cast<std::size_t>(std::min(n_samples - 1, i + 1))];
        smooth[static_cast<std::size_t>(i)] =
            (left + raw[static_cast<std::size_t>(i)] + right) / 3.0;
      }
      WaveFunctionTable table;
      table.representation = WaveFunctionTable::Representation::momentum;
      table.grid.resize(n_samples);
      for (int i = 0; i < n_samples; ++i) {
        table.grid[static_cast<std::size_t>(i)] =
            iv.k_minus + iv.width() * static_cast<double>(i) /
                             static_cast<double>(n_samples - 1);
      }
      table.amplitudes = smooth;
      table.norm_estimate = table.trapezoid_norm();

      const ProbeSpec probe = ProbeSpec::tabulated(aw, table);
      const double shift = pointer_shift(probe, aw, cfg.quad).shift;
      const double dev = std::abs(shift - static_cast<double>(sign));
      worst = std::max(worst, dev);
      check.require(dev <= 1e-8);
      rows.push_back({static_cast<double>(sign), static_cast<double>(c),
                      static_cast<double>(seed), shift, dev});
    }
  }

  res.artifacts.push_back(
      write_csv(cfg, "c5_unit_weak_value.csv",
                "weak_value_sign,case,seed,shift(q/g),deviation(q/g)", rows));
  res.computed.push_back({"max_deviation", worst});
  res.references.push_back({"shift", 1.0, "published-value"});
  res.notes.push_back(
      "probes are seeded random complex tables on 512 points, smoothed once; "
      "the interpolant's derivative error cancels between the two means "
      "because the kernel has unit modulus at weak value +-1");
  res.verdict = check.ok ? Verdict::pass : Verdict::fail;
  return res;
}

// ---------------------------------------------------------------------------
// C6: self-consistency of the mean kernel norm forces a sign change of
// D = |B|^2 - mbar inside the integration interval.
ClaimResult claim_c6(const ClaimConfig& cfg) {
  ClaimResult res;
  res.id = "C6";
  res.description =
      "the sign integral of |B|^2 - mbar must vanish for a self-consistent "
      "probe, which requires kernel-norm crossings inside the interval";
  res.tolerance = 1e-9;

  const WeakValue aw(complexd(std::sqrt(3.0), 0.0));
  const double mbar = 2.0;  // midline of |B|^2 in [1, 3]

  const auto sign_integral = [&](double lo, double hi) {
    const Interval iv = make_interval(lo, hi);
    const std::vector<double> zeros = kernel_norm_crossings(aw, mbar, iv);
    const IntegralResult r = integrate(
        [&](double k) {
          const double d = kernel_abs_sq(aw, k) - mbar;
          return complexd(d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0), 0.0);
        },
        iv, cfg.quad, zeros);
    return r.value.real();
  };

  Check check;
  const double i_off = sign_integral(0.1, 0.6);
  const double i_sym = sign_integral(-kPi / 2.0, kPi / 2.0);
  check.require(std::abs(i_off - (-0.5)) <= 1e-9);
  check.require(std::abs(i_off) > 0.4);
  check.require(std::abs(i_sym) <= 1e-9);

  const std::size_t zeros_off =
      kernel_norm_crossings(aw, mbar, make_interval(0.1, 0.6)).size();
  const std::size_t zeros_sym =
      kernel_norm_crossings(aw, mbar, make_interval(-kPi / 2.0, kPi / 2.0))
          .size();
  check.require(zeros_off == 0);
  check.require(zeros_sym == 2);

  // Without a crossing the variational construction must refuse the
  // interval: there is no self-consistent probe to build.
  bool refused = false;
  try {
    const ProbeSpec bad =
        ProbeSpec::variational(aw, mbar, 1.0, make_interval(0.1, 0.6));
    (void)bad;
  } catch (const NoSingularPointInInterval&) {
    refused = true;
  }
  check.require(refused);

  // Scan of b -> integral over [0, b]: the sign integral crosses zero where
  // the interval balances the regions of either sign, at b = pi/2 here.
  std::vector<std::vector<double>> rows;
  double prev_b = 0.0, prev_f = 0.0;
  double root = std::numeric_limits<double>::quiet_NaN();
  for (int j = 0; j <= 26; ++j) {
    const double b = 0.3 + 0.05 * j;
    const double f = sign_integral(0.0, b);
    rows.push_back({b, f});
    if (j > 0 && prev_f * f < 0.0) {
      double lo = prev_b, hi = b, flo = prev_f;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = sign_integral(0.0, mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      root = 0.5 * (lo + hi);
    }
    prev_b = b;
    prev_f = f;
  }
  res.artifacts.push_back(
      write_csv(cfg, "c6_sign_integral.csv",
                "interval_upper_end(g*p),sign_integral(g*p)", rows));

  check.require(std::isfinite(root));
  if (std::isfinite(root)) {
    check.require(std::abs(root - kPi / 2.0) <= 1e-8);
  }

  res.computed.push_back({"sign_integral_offset_interval", i_off});
  res.computed.push_back({"sign_integral_symmetric_interval", i_sym});
  res.computed.push_back({"crossings_offset_interval",
                          static_cast<double>(zeros_off)});
  res.computed.push_back({"crossings_symmetric_interval",
                          static_cast<double>(zeros_sym)});
  res.computed.push_back({"balanced_interval_end", root});
  res.references.push_back(
      {"sign_integral_offset_interval", -0.5, "closed-form"});
  res.references.push_back(
      {"sign_integral_symmetric_interval", 0.0, "closed-form"});
  res.references.push_back(
      {"balanced_interval_end", kPi / 2.0, "closed-form"});
  res.notes.push_back(
      "the variational constructor refuses an interval without kernel-norm "
      "crossings, matching the sign-integral obstruction");
  res.verdict = check.ok ? Verdict::pass : Verdict::fail;
  return res;
}

// ---------------------------------------------------------------------------
// C7: the regularized shift of the variational probe converges to the
// prescribed target as the exclusion radius shrinks.
ClaimResult claim_c7(const ClaimConfig& cfg) {
  ClaimResult res;
  res.id = "C7";
  res.description =
      "shrinking the exclusion radius around the kernel-norm crossings "
      "drives the variational probe's shift to the prescribed value";
  res.tolerance = 0.05;

  const WeakValue aw(complexd(std::sqrt(3.0), 0.0));
  const Interval iv = make_interval(-kPi / 2.0, kPi / 2.0);
  const double target = 3.0;
  const double m_off = 2.25;  // off the midline: finite-epsilon bias decays
  const double m_mid = 2.0;   // midline: the bias vanishes identically

  const ProbeSpec probe_off = ProbeSpec::variational(aw, m_off, target, iv);
  const ProbeSpec probe_mid = ProbeSpec::variational(aw, m_mid, target, iv);

  const std::vector<double> epsilons = {1e-2, 1e-3, 1e-4};
  Check check;
  std::vector<std::vector<double>> rows;
  double prev_dev = std::numeric_limits<double>::infinity();
  double final_dev = 0.0;
  double worst_mid = 0.0;
  for (double eps : epsilons) {
    QuadratureConfig quad = cfg.quad;
    quad.singularity_epsilon = eps;
    const double s_off = pointer_shift(probe_off, aw, quad).shift;
    const double s_mid = pointer_shift(probe_mid, aw, quad).shift;
    const double dev_off = std::abs(s_off - target);
    const double dev_mid = std::abs(s_mid - target);
    check.require(dev_off < prev_dev);
    check.require(dev_mid <= 1e-6);
    prev_dev = dev_off;
    final_dev = dev_off;
    worst_mid = std::max(worst_mid, dev_mid);
    rows.push_back({eps, s_off, dev_off, s_mid, dev_mid});
  }
  check.require(final_dev <= 0.05 * std::abs(target));

  res.artifacts.push_back(write_csv(
      cfg, "c7_epsilon_ladder.csv",
      "epsilon(g*p),shift_off_midline(q/g),deviation_off_midline(q/g),"
      "shift_midline(q/g),deviation_midline(q/g)",
      rows));
  res.computed.push_back({"final_deviation", final_dev});
  res.computed.push_back({"max_midline_deviation", worst_mid});
  res.references.push_back({"prescribed_shift", target, "definition"});
  res.notes.push_back(
      "off-midline mean kernel norm 2.25 gives a monotonically shrinking "
      "finite-epsilon bias; the midline value 2 balances the sign integral "
      "and reproduces the target at every epsilon");
  res.verdict = check.ok ? Verdict::pass : Verdict::fail;
  return res;
}

}  // namespace

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

ClaimResult run_claim(const std::string& id, const ClaimConfig& cfg) {
  ClaimResult (*fn)(const ClaimConfig&) = nullptr;
  if (id == "C1") fn = claim_c1;
  else if (id == "C2") fn = claim_c2;
  else if (id == "C3") fn = claim_c3;
  else if (id == "C4") fn = claim_c4;
  else if (id == "C5") fn = claim_c5;
  else if (id == "C6") fn = claim_c6;
  else if (id == "C7") fn = claim_c7;
  else throw InputError("unknown claim id: " + id);

  try {
    return fn(cfg);
  } catch (const Error& e) {
    ClaimResult res;
    res.id = id;
    res.description = "claim aborted by a numerical error";
    res.verdict = Verdict::fail;
    res.notes.push_back(std::string("error: ") + e.what());
    return res;
  }
}

std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids,
                                    const ClaimConfig& cfg) {
  std::vector<std::string> todo = ids;
  if (todo.empty()) {
    todo = {"C1", "C2", "C3", "C4", "C5", "C6", "C7"};
  }
  std::sort(todo.begin(), todo.end());
  std::vector<ClaimResult> out;
  out.reserve(todo.size());
  for (const auto& id : todo) {
    out.push_back(run_claim(id, cfg));
  }
  return out;
}

std::string claims_report_json(const std::vector<ClaimResult>& results,
                               const ClaimConfig& cfg) {
  nlohmann::ordered_json root;
  root["seed"] = cfg.seed;
  root["out_dir"] = cfg.out_dir;
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["description"] = r.description;
    nlohmann::ordered_json computed = nlohmann::ordered_json::array();
    for (const auto& c : r.computed) {
      computed.push_back({{"name", c.name}, {"value", c.value}});
    }
    j["computed"] = computed;
    nlohmann::ordered_json refs = nlohmann::ordered_json::array();
    for (const auto& ref : r.references) {
      refs.push_back({{"name", ref.name},
                      {"value", ref.value},
                      {"provenance", ref.provenance}});
    }
    j["references"] = refs;
    j["tolerance"] = r.tolerance;
    j["verdict"] = to_string(r.verdict);
    j["artifacts"] = r.artifacts;
    j["notes"] = r.notes;
    claims.push_back(j);
    all_pass = all_pass && r.verdict == Verdict::pass;
  }
  root["claims"] = claims;
  root["all_pass"] = all_pass;
  return root.dump(2) + "\n";
}

}  // namespace wva

#include "wva/fourier.hpp"

#include <algorithm>
#include <cmath>

namespace wva {

namespace {

constexpr complexd kI{0.0, 1.0};

// Hurwitz zeta(m, a) = sum_{j>=0} (a+j)^{-m} for integer m >= 2, a > 0, by
// direct summation of the first J terms plus the Euler-Maclaurin estimate of
// the remainder at x = a + J:
//   x^{1-m}/(m-1) + x^{-m}/2 + m x^{-m-1}/12 - m(m+1)(m+2) x^{-m-3}/720.
double hurwitz_zeta(int m, double a) {
  constexpr int kDirectTerms = 60;
  double sum = 0.0;
  for (int j = 0; j < kDirectTerms; ++j) {
    sum += std::pow(a + j, -m);
  }
  const double x = a + kDirectTerms;
  sum += std::pow(x, 1 - m) / (m - 1);
  sum += 0.5 * std::pow(x, -m);
  sum += m * std::pow(x, -m - 1) / 12.0;
  sum -= m * (m + 1.0) * (m + 2.0) * std::pow(x, -m - 3) / 720.0;
  return sum;
}

}  // namespace

WaveFunctionTable transform_to_position(const ProbeSpec& probe,
                                        const std::vector<double>& x_grid,
                                        const QuadratureConfig& cfg) {
  if (x_grid.size() < 2) {
    throw InputError("transform_to_position: grid needs at least 2 points");
  }
  const std::vector<double>& singular = probe.singular_points();
  if (!singular.empty() && cfg.singularity_epsilon <= 0.0) {
    throw SingularProbe(
        "probe has non-integrable singular points; set "
        "singularity_epsilon > 0 before transforming");
  }

  WaveFunctionTable table;
  table.representation = WaveFunctionTable::Representation::position;
  table.grid = x_grid;
  table.amplitudes.reserve(x_grid.size());

  const double norm_factor = 1.0 / std::sqrt(2.0 * M_PI);
  for (double x : x_grid) {
    const IntegralResult res = integrate(
        [&probe, x](double k) {
          return probe.evaluate(k).value * std::exp(kI * k * x);
        },
        probe.support(), cfg, singular, probe.smooth_breakpoints());
    table.amplitudes.push_back(norm_factor * res.value);
  }
  table.validate();
  table.norm_estimate = table.trapezoid_norm();
  return table;
}

double position_mean(const WaveFunctionTable& table, double center,
                     double half_width) {
  table.validate();
  if (table.representation != WaveFunctionTable::Representation::position) {
    throw WrongRepresentation("position_mean needs a position-space table");
  }
  if (!(half_width > 0.0)) {
    throw InputError("position_mean: half_width must be positive");
  }
  // Clip the window symmetrically to the grid so the 1/x^2 tail lever arms
  // keep cancelling even when the requested window overhangs the table.
  const double w = std::min({half_width, center - table.grid.front(),
                             table.grid.back() - center});
  if (!(w > 0.0)) {
    throw InputError("position_mean: window does not overlap the grid");
  }

  double weighted = 0.0;
  double mass = 0.0;
  for (std::size_t i = 1; i < table.grid.size(); ++i) {
    const double x0 = table.grid[i - 1];
    const double x1 = table.grid[i];
    if (x0 < center - w - 1e-12 || x1 > center + w + 1e-12) continue;
    const double d0 = std::norm(table.amplitudes[i - 1]);
    const double d1 = std::norm(table.amplitudes[i]);
    const double h = x1 - x0;
    mass += 0.5 * h * (d0 + d1);
    weighted += 0.5 * h * (x0 * d0 + x1 * d1);
  }
  if (!(mass > 0.0)) {
    throw ZeroNorm("position_mean: no density mass inside the window");
  }
  return weighted / mass;
}

DiscreteSumResult discrete_even_sum(const WeakValue& aw, int n_max) {
  if (n_max < 1) {
    throw InputError("discrete_even_sum: n_max must be >= 1");
  }
  DiscreteSumResult out;
  for (int n = -n_max; n <= n_max; ++n) {
    out.sum += std::norm(xi0_lerch(aw, 2.0 * n));
  }

  // Tail estimate.  |xi0(2n)|^2 = (P/4) |Phi(z,1,n+1/2)|^2 with
  // P = 8|Re A_w|/(pi^2 |1+sigma A_w|^2).  For |n| > n_max expand Phi in
  // inverse powers of x = n + 1/2 with moments L_j = sum_k k^j z^k:
  //   |Phi|^2 ~ |L0|^2 [ 1/x^2 -+ c3/|x|^3 + c4/x^4 -+ c5/|x|^5 ],
  // upper signs on the positive-n side, lower on the negative-n side; the
  // sums over n collapse to Hurwitz zetas.
  const complexd z = aw.z();
  const complexd one_minus_z = 1.0 - z;
  const complexd l0 = 1.0 / one_minus_z;
  const complexd l1 = z / (one_minus_z * one_minus_z);
  const complexd l2 = z * (1.0 + z) / std::pow(one_minus_z, 3);
  const complexd l3 =
      z * (1.0 + 4.0 * z + z * z) / std::pow(one_minus_z, 4);
  const complexd u = l1 / l0;
  const complexd v = l2 / l0;
  const complexd w = l3 / l0;
  const double c3 = 2.0 * u.real();
  const double c4 = std::norm(u) + 2.0 * v.real();
  const double c5 = 2.0 * (w + u * std::conj(v)).real();

  const double p = 8.0 * aw.abs_re() /
                   (M_PI * M_PI * std::norm(1.0 + aw.sigma() * aw.value()));
  const double pref = 0.25 * p * std::norm(l0);
  const double ap = n_max + 1.5;  // x = n + 1/2 for n >= n_max + 1
  const double am = n_max + 0.5;  // |x| = n - 1/2 for n <= -(n_max + 1)
  const double tail_pos = pref * (hurwitz_zeta(2, ap) - c3 * hurwitz_zeta(3, ap) +
                                  c4 * hurwitz_zeta(4, ap) -
                                  c5 * hurwitz_zeta(5, ap));
  const double tail_neg = pref * (hurwitz_zeta(2, am) + c3 * hurwitz_zeta(3, am) +
                                  c4 * hurwitz_zeta(4, am) +
                                  c5 * hurwitz_zeta(5, am));
  out.tail_estimate = tail_pos + tail_neg;
  return out;
}

}  // namespace wva

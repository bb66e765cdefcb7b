#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "test_support.hpp"
#include "wva/fourier.hpp"
#include "wva/lerch.hpp"
#include "wva/model.hpp"
#include "wva/probes.hpp"
#include "wva/quadrature.hpp"
#include "wva/table.hpp"

using wva::complexd;
using wva::ProbeSpec;
using wva::WaveFunctionTable;
using wva::WeakValue;

namespace {

const wva::QuadratureConfig kCfg;

WeakValue root3() { return WeakValue(complexd(std::sqrt(3.0), 0.0)); }

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * i / (n - 1));
  }
  return out;
}

// A flat probe 1/sqrt(pi) on [-pi/2, pi/2], entered through the tabulated
// family (constant samples make the cubic interpolant exact).
ProbeSpec uniform_probe() {
  WaveFunctionTable t;
  t.representation = WaveFunctionTable::Representation::momentum;
  const int n = 65;
  for (int i = 0; i < n; ++i) {
    t.grid.push_back(-M_PI / 2 + M_PI * i / (n - 1));
    t.amplitudes.push_back(complexd(1.0 / std::sqrt(M_PI), 0.0));
  }
  t.norm_estimate = t.trapezoid_norm();
  return ProbeSpec::tabulated(root3(), t);
}

}  // namespace

TEST_CASE("transform of the flat probe has the sinc closed form") {
  const ProbeSpec probe = uniform_probe();
  const WaveFunctionTable out =
      wva::transform_to_position(probe, {0.0, 0.7, 2.0}, kCfg);
  REQUIRE(out.amplitudes.size() == 3);
  CHECK(out.representation == WaveFunctionTable::Representation::position);

  // xi_t(x) = (2 pi)^{-1/2} (1/sqrt(pi)) * 2 sin(pi x/2)/x; at x = 0 the
  // limit is 1/sqrt(2).
  CHECK(out.amplitudes[0].real() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
  const double at07 = 2.0 * std::sin(0.35 * M_PI) / 0.7 /
                      (std::sqrt(2.0 * M_PI) * std::sqrt(M_PI));
  CHECK(out.amplitudes[1].real() == doctest::Approx(at07).epsilon(1e-9));
  // x = 2 is a zero of the sinc pattern.
  CHECK(std::abs(out.amplitudes[2]) < 1e-10);
}

TEST_CASE("transform of the optimal-claim probe matches the closed form") {
  const WeakValue aw = root3();
  const ProbeSpec probe = ProbeSpec::ssh_optimal(aw);
  const double xf = wva::shift_ssh_claimed(aw);
  // The probe's phase e^{-i xf k} centers its density at xf; relative
  // coordinates t = x - xf reproduce the gauge-centered closed form.
  const std::vector<double> offsets = {-1.0, 0.0, 0.7, 2.0};
  std::vector<double> grid;
  for (double t : offsets) grid.push_back(xf + t);
  const WaveFunctionTable out = wva::transform_to_position(probe, grid, kCfg);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const complexd closed = wva::xi0_lerch(aw, offsets[i]);
    CHECK(std::abs(out.amplitudes[i] - closed) < 1e-8);
  }
}

TEST_CASE("gaussian self-transform recenters at the probe center") {
  const double x0 = 1.25;
  const ProbeSpec probe = ProbeSpec::gaussian(root3(), 0.5, x0);
  const WaveFunctionTable out = wva::transform_to_position(
      probe, linspace(x0 - 10.0, x0 + 10.0, 401), kCfg);
  CHECK(wva::position_mean(out, x0, 10.0) ==
        doctest::Approx(x0).epsilon(1e-8));
}

TEST_CASE("shift theorem relates phased and shifted transforms") {
  // The same Gaussian with centers 0 and x0, evaluated on grids offset by
  // x0, must produce identical amplitudes.
  const double x0 = 0.8;
  const ProbeSpec centered = ProbeSpec::gaussian(root3(), 0.6, 0.0);
  const ProbeSpec moved = ProbeSpec::gaussian(root3(), 0.6, x0);
  const std::vector<double> base_grid = linspace(-3.0, 3.0, 25);
  std::vector<double> moved_grid;
  for (double x : base_grid) moved_grid.push_back(x + x0);
  const WaveFunctionTable a =
      wva::transform_to_position(centered, base_grid, kCfg);
  const WaveFunctionTable b =
      wva::transform_to_position(moved, moved_grid, kCfg);
  for (std::size_t i = 0; i < base_grid.size(); ++i) {
    CHECK(std::abs(a.amplitudes[i] - b.amplitudes[i]) < 1e-10);
  }
}

TEST_CASE("position mean validates inputs and windows symmetrically") {
  const ProbeSpec probe = uniform_probe();
  const WaveFunctionTable out =
      wva::transform_to_position(probe, linspace(-40.0, 40.0, 1601), kCfg);
  // Symmetric density: mean 0 to high accuracy.
  CHECK(std::abs(wva::position_mean(out, 0.0, 40.0)) < 1e-9);

  WaveFunctionTable momentum;
  momentum.representation = WaveFunctionTable::Representation::momentum;
  momentum.grid = {0.0, 1.0};
  momentum.amplitudes = {complexd(1.0, 0.0), complexd(1.0, 0.0)};
  CHECK_THROWS_AS(wva::position_mean(momentum, 0.0, 1.0),
                  wva::WrongRepresentation);
  CHECK_THROWS_AS(wva::position_mean(out, 0.0, -1.0), wva::InputError);
}

TEST_CASE("parseval consistency for smooth and hard-tailed probes") {
  // Gaussian: position tails decay fast, trapezoid integral hits 1 sharply.
  const ProbeSpec gauss = ProbeSpec::gaussian(root3(), 0.5, 0.0);
  const WaveFunctionTable gauss_x =
      wva::transform_to_position(gauss, linspace(-12.0, 12.0, 241), kCfg);
  CHECK(gauss_x.trapezoid_norm() == doctest::Approx(1.0).epsilon(1e-8));

  // Optimal-claim probe: 1/x^2 density tails, loose tolerance at a wide
  // window.
  const ProbeSpec ssh = ProbeSpec::ssh_optimal(root3());
  const double xf = wva::shift_ssh_claimed(root3());
  const WaveFunctionTable ssh_x = wva::transform_to_position(
      ssh, linspace(xf - 220.0, xf + 220.0, 1761), kCfg);
  CHECK(ssh_x.trapezoid_norm() == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("discrete even-point sums reproduce the half-norm split") {
  // A_w = sqrt 3 at the published sample count.
  const wva::DiscreteSumResult root3_sum =
      wva::discrete_even_sum(root3(), 60);
  CHECK(root3_sum.sum + root3_sum.tail_estimate ==
        doctest::Approx(0.5).epsilon(1e-6));
  CHECK(root3_sum.tail_estimate > 0.0);

  // Complex weak value.
  const wva::DiscreteSumResult complex_sum =
      wva::discrete_even_sum(WeakValue(complexd(0.3, 0.4)), 60);
  CHECK(complex_sum.sum + complex_sum.tail_estimate ==
        doctest::Approx(0.5).epsilon(1e-6));

  // Near-degenerate weak value: the n = 0 term dominates.
  const wva::DiscreteSumResult near_unit =
      wva::discrete_even_sum(WeakValue(complexd(1.0 - 1e-3, 0.0)), 60);
  CHECK(near_unit.sum + near_unit.tail_estimate ==
        doctest::Approx(0.5).epsilon(1e-5));

  CHECK_THROWS_AS(wva::discrete_even_sum(root3(), 0), wva::InputError);
}

TEST_CASE("partial even sums grow monotonically toward the bound") {
  const WeakValue aw = root3();
  double previous = 0.0;
  for (int n_max : {5, 10, 20, 40, 80}) {
    const wva::DiscreteSumResult res = wva::discrete_even_sum(aw, n_max);
    CHECK(res.sum >= previous);
    CHECK(res.sum <= 0.5 + res.tail_estimate);
    previous = res.sum;
  }
}

TEST_CASE("singular probes require regularization before transforming") {
  const ProbeSpec var = ProbeSpec::variational(
      root3(), 2.0, 3.0, {-M_PI / 2, M_PI / 2});
  CHECK_THROWS_AS(wva::transform_to_position(var, {0.0, 1.0}, kCfg),
                  wva::SingularProbe);
  wva::QuadratureConfig eps_cfg = kCfg;
  eps_cfg.singularity_epsilon = 1e-2;
  const WaveFunctionTable ok =
      wva::transform_to_position(var, {0.0, 1.0}, eps_cfg);
  CHECK(ok.amplitudes.size() == 2);
}

#include "wva/model.hpp"

#include <cmath>

namespace wva {

WeakValue::WeakValue(complexd value) : value_(value) {
  if (value.real() == 0.0) {
    throw DegenerateWeakValue(
        "weak value has Re(A_w) = 0; sigma and z are undefined");
  }
  sigma_ = value.real() > 0.0 ? 1.0 : -1.0;
  z_ = (1.0 - sigma_ * value_) / (1.0 + sigma_ * value_);
}

WeakValue weak_value_spin(const SpinScenario& scenario) {
  const double theta = scenario.theta;
  if (!(theta >= 0.0 && theta < M_PI)) {
    if (theta == M_PI) {
      throw OrthogonalPostSelection(
          "theta = pi: post-selection orthogonal to preparation");
    }
    throw InputError("spin scenario requires theta in [0, pi)");
  }
  // tan(theta/2) is the exact value of sin(theta)/(1 + cos(theta)) and does
  // not lose precision as theta -> pi.
  const double aw = std::tan(0.5 * theta);
  if (aw == 0.0) {
    throw DegenerateWeakValue("theta = 0 gives A_w = 0 (Re A_w = 0)");
  }
  return WeakValue(complexd(aw, 0.0));
}

complexd kernel_b(const WeakValue& aw, double k) {
  return std::cos(k) - complexd(0.0, 1.0) * aw.value() * std::sin(k);
}

complexd kernel_b_prime(const WeakValue& aw, double k) {
  return -std::sin(k) - complexd(0.0, 1.0) * aw.value() * std::cos(k);
}

double kernel_abs_sq(const WeakValue& aw, double k) {
  return std::norm(kernel_b(aw, k));
}

KernelValue kernel(const WeakValue& aw, double k) {
  KernelValue out;
  out.b = kernel_b(aw, k);
  out.b_abs_sq = std::norm(out.b);
  out.b_star_bprime = std::conj(out.b) * kernel_b_prime(aw, k);
  return out;
}

KernelCoefficients kernel_coefficients(const WeakValue& aw) {
  KernelCoefficients c;
  c.a = 0.5 * (1.0 + aw.abs_sq());
  c.b = 0.5 * (1.0 - aw.abs_sq());
  c.c = aw.im();
  return c;
}

double shift_weak(const WeakValue& aw) { return aw.re(); }

double shift_strong(const WeakValue& aw) {
  return 2.0 * aw.re() / (1.0 + aw.abs_sq());
}

double shift_ssh_claimed(const WeakValue& aw) {
  return (1.0 + aw.abs_sq()) / (2.0 * aw.re());
}

double period_integral_inv_b2(const WeakValue& aw) {
  return M_PI / aw.abs_re();
}

double period_integral_inv_b4(const WeakValue& aw) {
  const double r = aw.abs_re();
  return M_PI * (1.0 + aw.abs_sq()) / (2.0 * r * r * r);
}

}  // namespace wva

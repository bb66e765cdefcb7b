#ifndef WVA_MODEL_HPP
#define WVA_MODEL_HPP

// Weak value, measurement kernel and closed-form pointer shifts.
//
// The physical setting: a system observable A with A^2 = 1 is measured weakly
// and the probe statistics are conditioned on a post-selected system state.
// The conditioned probe wave function in momentum representation is
//
//     xi_f(k) = B(k) xi_i(k),        B(k) = cos k - i A_w sin k,
//
// where A_w = <f|A|i>/<f|i> is the (complex) weak value.  All positions are
// expressed in units of the coupling strength, x = q/g and k = g p, so g
// never appears explicitly.
//
// Everything in this header is a pure function of its inputs.

#include <complex>

#include "wva/errors.hpp"

namespace wva {

using complexd = std::complex<double>;

// A validated weak value.  Construction rejects Re(A_w) = 0 because both the
// sign sigma = sign(Re A_w) and z = (1 - sigma A_w)/(1 + sigma A_w) are
// undefined there; with Re(A_w) != 0 one always has |z| < 1.
class WeakValue {
 public:
  explicit WeakValue(complexd value);

  complexd value() const { return value_; }
  double sigma() const { return sigma_; }
  complexd z() const { return z_; }

  double re() const { return value_.real(); }
  double im() const { return value_.imag(); }
  double abs_re() const { return sigma_ * value_.real(); }
  double abs_sq() const { return std::norm(value_); }

 private:
  complexd value_;
  double sigma_;
  complexd z_;
};

// Spin-1/2 scenario: preparation along +X, post-selection in the Z-X plane at
// angle theta from Z, weak measurement of sigma_z.  Then
// A_w = sin(theta)/(1 + cos(theta)) = tan(theta/2), purely real.
struct SpinScenario {
  double theta = 0.0;  // radians, restricted to [0, pi)
};

// theta = pi is orthogonal post-selection; theta = 0 gives A_w = 0 which is a
// degenerate weak value.  Values outside [0, pi) are rejected (negative theta
// is handled by the caller through the symmetry A_w(-theta) = -A_w(theta)).
WeakValue weak_value_spin(const SpinScenario& scenario);

// B(k), |B(k)|^2 and B*(k) B'(k) evaluated together.  The trigonometric
// expansions
//   |B|^2   = (1+|A_w|^2)/2 + (1-|A_w|^2)/2 cos 2k + Im(A_w) sin 2k
//   B* B'   = -(1-|A_w|^2)/2 sin 2k + Im(A_w) cos 2k - i Re(A_w)
// are algebraic identities of the product form; kernel() evaluates the
// product and the expansions agree to rounding (see the unit tests).
struct KernelValue {
  complexd b;
  double b_abs_sq;
  complexd b_star_bprime;
};

KernelValue kernel(const WeakValue& aw, double k);

complexd kernel_b(const WeakValue& aw, double k);
complexd kernel_b_prime(const WeakValue& aw, double k);
double kernel_abs_sq(const WeakValue& aw, double k);

// Coefficients of |B(k)|^2 = a + b cos 2k + c sin 2k.  They satisfy
// a^2 - b^2 - c^2 = (Re A_w)^2, which is what makes the period integrals of
// 1/|B|^2 and 1/|B|^4 below come out in closed form.
struct KernelCoefficients {
  double a;
  double b;
  double c;
};

KernelCoefficients kernel_coefficients(const WeakValue& aw);

// Pointer shift in the weak-probe limit (probe momentum spread W -> 0):
// Delta<x> = Re(A_w).
double shift_weak(const WeakValue& aw);

// Pointer shift in the strong-probe limit (W -> infinity):
// Delta<x> = 2 Re(A_w)/(1 + |A_w|^2).  For the spin scenario this is
// sin(theta).
double shift_strong(const WeakValue& aw);

// The shift produced by the probe family advertised as optimal:
// Delta<x> = (1 + |A_w|^2)/(2 Re A_w), the exact reciprocal of shift_strong.
// For the spin scenario this is 1/sin(theta).
double shift_ssh_claimed(const WeakValue& aw);

// Closed-form period integrals of the kernel, valid over any interval of
// length pi (the period of |B|^2):
//   integral 1/|B|^2 dk = pi / |Re A_w|
//   integral 1/|B|^4 dk = pi (1 + |A_w|^2) / (2 |Re A_w|^3)
double period_integral_inv_b2(const WeakValue& aw);
double period_integral_inv_b4(const WeakValue& aw);

}  // namespace wva

#endif  // WVA_MODEL_HPP

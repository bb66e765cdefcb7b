#ifndef WVA_LERCH_HPP
#define WVA_LERCH_HPP

// The Lerch transcendent Phi(z, 1, x) = sum_{k>=0} z^k/(x+k), restricted to
// s = 1, and the closed forms built from it for the position-space values of
// the gauge-centered optimal probe,
//
//     xi0(x) = sqrt(2|Re A_w|)/(pi (1+sigma A_w)) cos(pi x/2)
//              Phi(z, 1, (1+sigma x)/2),       z = (1-sigma A_w)/(1+sigma A_w).
//
// xi0 is the Fourier transform of sqrt(|Re A_w|/pi)/B(k) on [-pi/2, pi/2]
// with the e^{+ikx}/sqrt(2 pi) convention; the probe advertised as optimal is
// xi0 translated by (1+|A_w|^2)/(2 Re A_w).
//
// Phi(z,1,x) has simple poles where (1+sigma x)/2 is a non-positive integer,
// i.e. at x = -sigma(2n+1); the cos factor has zeros at every odd integer.
// At x = -sigma(2n+1) the zero cancels the pole and the finite limit is
// (-z)^n sqrt(2|Re A_w|)/(1+sigma A_w); at x = +sigma(2n+1), n >= 1, the cos
// zero meets a regular Phi and xi0 vanishes.

#include <complex>

#include "wva/errors.hpp"
#include "wva/model.hpp"

namespace wva {

struct LerchEvaluation {
  complexd value{0.0, 0.0};
  long terms_used = 0;
  double tail_bound = 0.0;
  // Set when |z| >= 0.98: the geometric convergence is so slow that the term
  // cap may dominate the accuracy budget.
  bool slow_convergence = false;
};

// Direct summation of Phi(z, 1, x) until the geometric tail bound
// |z|^K / ((Re x + K)(1 - |z|)) drops below tol (requires Re x + K > 0).
// Throws SeriesDomain for |z| >= 1 and PoleHit when x + k = 0 for some
// integer k >= 0.  Hard cap of 10^7 terms.
LerchEvaluation lerch_phi(complexd z, complexd x, double tol);

// xi0 at arbitrary real x via the Lerch series.  Within 1e-4 of a pole of
// Phi the evaluation switches to the analytic limit branch (the polar term
// is isolated and cancelled against the cos zero in closed form) because the
// naive product loses all significant digits there.
complexd xi0_lerch(const WeakValue& aw, double x);

// xi0 at the even integers x = 2n, any sign of n, through the Atanh form.
// With the sigma-folded index m = sigma n (the Lerch argument at x = 2n is
// (1 + 2 sigma n)/2):
//   xi0(2n) = sqrt(8|Re A_w|)/(pi (-z)^m (1+sigma A_w))
//             [ Atanh(sqrt z)/sqrt z - sgn(m) S_m ],
//   S_m = sum z^k/(2k+1) over k from min(0, m) to max(m-1, -1).
// Principal branches throughout; agrees with xi0_lerch(2n) identically.
complexd xi0_even(const WeakValue& aw, int n);

}  // namespace wva

#endif  // WVA_LERCH_HPP

#ifndef WVA_FOURIER_HPP
#define WVA_FOURIER_HPP

// Finite-support momentum-to-position transform, windowed position moments,
// and the discrete even-point sum behind the "samples are not probabilities"
// argument.
//
// Transform convention:  xi_tilde(x) = (2 pi)^{-1/2} integral xi(k) e^{+ikx} dk
// over the probe support.  Under this convention a momentum-space phase
// e^{-i x0 k} translates the position density by +x0, and the transform of
// the gauge-centered optimal probe reproduces the Lerch closed form xi0
// including its prefactor.

#include <vector>

#include "wva/lerch.hpp"
#include "wva/probes.hpp"
#include "wva/quadrature.hpp"
#include "wva/table.hpp"

namespace wva {

// One adaptive quadrature per grid point.  Probes with singular points
// require cfg.singularity_epsilon > 0 (SingularProbe otherwise).  The
// returned table is in position representation with norm_estimate set to the
// trapezoid integral of |xi_tilde|^2 over the grid (the Parseval
// cross-check: it approaches the k-space norm as the window grows, at the
// O(1/window) rate set by the 1/x^2 density tails of finite-support probes).
WaveFunctionTable transform_to_position(const ProbeSpec& probe,
                                        const std::vector<double>& x_grid,
                                        const QuadratureConfig& cfg);

// Windowed mean of the position density: trapezoid sums of x |xi|^2 and
// |xi|^2 over the samples with |x - center| <= half_width.  The window must
// be symmetric about the phase-predicted center because the density tails
// fall off only as 1/x^2 (with equal left and right coefficients): a
// symmetric window cancels the divergent lever arms, an asymmetric one does
// not.  Throws WrongRepresentation for momentum-space tables.
double position_mean(const WaveFunctionTable& table, double center,
                     double half_width);

struct DiscreteSumResult {
  // sum_{|n| <= n_max} |xi0(2n)|^2.
  double sum = 0.0;
  // Estimate of the omitted |n| > n_max mass, from the asymptotic expansion
  // of the Lerch values Phi(z,1,n+1/2) ~ sum_j (-)^j L_j/(n+1/2)^{j+1} with
  // L_j the polylogarithm-type moments of z^k; summing the expansion over
  // the tails gives Hurwitz-zeta coefficients.  Good to a few 1e-10 absolute
  // by n_max = 60 for moderate |z|.
  double tail_estimate = 0.0;
};

// The even-point sample sum of the gauge-centered optimal probe.  The exact
// value of the full sum is 1/2, half of the unit position-space norm: the
// discrete samples do not represent probabilities.
DiscreteSumResult discrete_even_sum(const WeakValue& aw, int n_max);

}  // namespace wva

#endif  // WVA_FOURIER_HPP

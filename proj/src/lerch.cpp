#include "wva/lerch.hpp"

#include <cmath>

namespace wva {

namespace {

constexpr long kMaxTerms = 10'000'000;
constexpr double kSlowConvergenceThreshold = 0.98;

// Fails if x + k = 0 for some integer k >= 0 within rounding.
void require_no_pole(complexd x) {
  if (x.imag() != 0.0) return;
  const double r = std::round(-x.real());
  if (r >= 0.0 && std::abs(x.real() + r) <
                      1e-12 * (1.0 + std::abs(x.real()))) {
    throw PoleHit("lerch_phi: x + k = 0 at k = " +
                  std::to_string(static_cast<long>(r)));
  }
}

// Series for Phi with one term skipped (used by the near-pole branch of
// xi0_lerch, where the skipped term is treated analytically).  skip < 0
// disables skipping.  Terms are summed until the geometric tail bound falls
// below tol.
complexd lerch_phi_skip(complexd z, complexd x, double tol, long skip) {
  complexd sum{0.0, 0.0};
  complexd zk{1.0, 0.0};
  const double az = std::abs(z);
  for (long k = 0; k < kMaxTerms; ++k) {
    if (k != skip) sum += zk / (x + static_cast<double>(k));
    zk *= z;
    const double denom = x.real() + static_cast<double>(k) + 1.0;
    if (denom > 0.0) {
      const double tail = std::abs(zk) / (denom * (1.0 - az));
      if (tail <= tol) return sum;
    }
  }
  return sum;  // term cap reached; caller sees it via LerchEvaluation
}

}  // namespace

LerchEvaluation lerch_phi(complexd z, complexd x, double tol) {
  const double az = std::abs(z);
  if (az >= 1.0) {
    throw SeriesDomain("lerch_phi: series requires |z| < 1, got |z| = " +
                       std::to_string(az));
  }
  require_no_pole(x);

  LerchEvaluation out;
  out.slow_convergence = az >= kSlowConvergenceThreshold;

  complexd sum{0.0, 0.0};
  complexd zk{1.0, 0.0};
  for (long k = 0; k < kMaxTerms; ++k) {
    sum += zk / (x + static_cast<double>(k));
    zk *= z;
    const double denom = x.real() + static_cast<double>(k) + 1.0;
    if (denom > 0.0) {
      const double tail = std::abs(zk) / (denom * (1.0 - az));
      if (tail <= tol) {
        out.value = sum;
        out.terms_used = k + 1;
        out.tail_bound = tail;
        return out;
      }
    }
  }
  out.value = sum;
  out.terms_used = kMaxTerms;
  out.tail_bound = std::abs(zk) / ((1.0 - az) *
                                   std::max(1.0, x.real() + kMaxTerms));
  return out;
}

complexd xi0_lerch(const WeakValue& aw, double x) {
  const double sigma = aw.sigma();
  const complexd z = aw.z();
  const complexd prefactor =
      std::sqrt(2.0 * aw.abs_re()) / (M_PI * (1.0 + sigma * aw.value()));
  constexpr double series_tol = 1e-15;
  constexpr double pole_window = 1e-4;

  // Pole of Phi nearest to x: poles sit at x = -sigma(2n+1), n >= 0.
  const double n_real = std::round((-sigma * x - 1.0) / 2.0);
  if (n_real >= 0.0) {
    const long n = static_cast<long>(n_real);
    const double pole = -sigma * (2.0 * n_real + 1.0);
    const double delta = x - pole;
    if (std::abs(delta) < pole_window) {
      // Analytic limit branch.  Writing Phi = z^n/(u+n) + Phi_reg with
      // u = (1+sigma x)/2, the polar factor combines with the cos zero into
      // cos(pi x/2)/(u+n) = (-1)^n (2/delta) sin(pi delta/2), which is
      // analytic in delta and equals pi (-1)^n at the pole itself.
      const complexd u{0.5 * (1.0 + sigma * x), 0.0};
      const complexd phi_reg = lerch_phi_skip(z, u, series_tol, n);
      const double sinc_like =
          (delta == 0.0) ? M_PI
                         : 2.0 * std::sin(0.5 * M_PI * delta) / delta;
      const double parity = (n % 2 == 0) ? 1.0 : -1.0;
      const complexd zn = std::pow(z, static_cast<double>(n));
      return prefactor *
             (parity * zn * sinc_like +
              std::cos(0.5 * M_PI * x) * phi_reg);
    }
  }

  const complexd u{0.5 * (1.0 + sigma * x), 0.0};
  const LerchEvaluation phi = lerch_phi(z, u, series_tol);
  return prefactor * std::cos(0.5 * M_PI * x) * phi.value;
}

complexd xi0_even(const WeakValue& aw, int n) {
  const double sigma = aw.sigma();
  const complexd z = aw.z();
  // The Lerch argument at x = 2n is (1 + 2 sigma n)/2, so the series index
  // that enters every closed form below is the sigma-folded m = sigma n (the
  // cos factor contributes (-1)^n, which equals (-1)^m).
  const int m = sigma < 0.0 ? -n : n;

  // For m > 0 the bracket below is Atanh(sqrt z)/sqrt z minus its first m
  // series terms, a difference of order z^m: once |z|^m is small the
  // subtraction cancels catastrophically (and at z = 0 the 1/(-z)^m
  // prefactor is not even representable).  In that regime the bracket is
  // expanded analytically, bracket/(-z)^m = (-1)^m sum_{j>=0} z^j/(2(j+m)+1),
  // which is cancellation-free and covers every m.
  if (std::pow(std::abs(z), std::abs(m)) < 1e-4) {
    complexd sum{0.0, 0.0};
    complexd zj{1.0, 0.0};
    for (int j = 0; j < 200; ++j) {
      sum += zj / (2.0 * (j + m) + 1.0);
      zj *= z;
      if (std::abs(zj) < 1e-18) break;
    }
    const double parity = (m % 2 == 0) ? 1.0 : -1.0;
    return std::sqrt(8.0 * aw.abs_re()) /
           (M_PI * (1.0 + sigma * aw.value())) * parity * sum;
  }

  const complexd sqrt_z = std::sqrt(z);
  const complexd atanh_term = std::atanh(sqrt_z) / sqrt_z;

  // S_m = sum z^k/(2k+1), k from min(0, m) to max(m-1, -1); empty for m = 0.
  complexd partial{0.0, 0.0};
  if (m > 0) {
    complexd zk{1.0, 0.0};
    for (int k = 0; k <= m - 1; ++k) {
      partial += zk / (2.0 * k + 1.0);
      zk *= z;
    }
  } else if (m < 0) {
    complexd zk = std::pow(z, static_cast<double>(m));
    for (int k = m; k <= -1; ++k) {
      partial += zk / (2.0 * k + 1.0);
      zk *= z;
    }
  }
  const double sgn_m = (m > 0) ? 1.0 : (m < 0 ? -1.0 : 0.0);

  const complexd minus_z_m = std::pow(-z, static_cast<double>(m));
  const complexd prefactor = std::sqrt(8.0 * aw.abs_re()) /
                             (M_PI * minus_z_m * (1.0 + sigma * aw.value()));
  return prefactor * (atanh_term - sgn_m * partial);
}

}  // namespace wva

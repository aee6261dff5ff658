/**
 * @file  certificate.hpp
 * @brief A posteriori checks of the optimality system for a computed (u, sigma, n).
 *
 * For a minimizer u_n of TV(u) + n (int u - 1)^2 over u >= 0 there is a
 * field sigma with |sigma| <= 1, sigma . grad u = |grad u| (including the
 * boundary trace via zero extension) and
 *
 *   -div sigma + 2 n (int u - 1) = 0   where u > 0.
 *
 * The certificate measures how far a discrete pair is from satisfying each
 * relation, plus the three eigenvalue estimators that should agree.
 */
#pragma once

#include <algorithm>
#include <cmath>

#include "onelap/error.hpp"
#include "onelap/grid.hpp"
#include "onelap/solver.hpp"

namespace onelap {

struct Certificate {
  double sup_sigma = 0.0;
  double extremality_gap = 0.0;
  double pde_residual = 0.0;
  double mass = 0.0;
  double multiplier = 0.0;
  double rayleigh = 0.0;
  /// TV(u) + n (int u - 1)^2.
  double energy = 0.0;
  double sign_threshold = 0.0;
  double n = 0.0;
};

/// Acceptance thresholds for a converged run.
struct CertificateLimits {
  double sup_sigma = 1.05;
  double extremality_gap = 0.05;
  double pde_residual = 0.1;
  double estimator_spread = 0.10;
};

/// max_k |s_k|.
inline double dual_feasibility(const VectorField& s) {
  double m = 0.0;
  const auto sx = s.vx();
  const auto sy = s.vy();
  for (std::size_t k = 0; k < sx.size(); ++k) m = std::max(m, std::hypot(sx[k], sy[k]));
  return m;
}

/// |<s, grad u> - TV(u)| / TV(u).
inline double extremality_gap(const VectorField& s, const ScalarField& u) {
  const double tv = total_variation(u);
  if (!(tv > 0.0)) throw InvalidArgument("extremality gap undefined: TV(u) = 0 (degenerate eigenfunction)");
  return std::abs(inner(s, gradient(u)) - tv) / tv;
}

/// Default threshold for the sign indicator: 1e-3 max u.
inline double default_sign_threshold(const ScalarField& u) { return 1e-3 * u.max(); }

/**
 * L2 norm of -div s + 2 n (int u - 1) over {u > tau}, scaled by
 * 1 / max(1, |multiplier|). The indicator of {u > tau} stands in for the
 * sign of u, which is only determined where u is positive.
 */
inline double pde_residual(const ScalarField& u, const VectorField& s, double n, double tau) {
  if (!(tau > 0.0)) throw InvalidArgument("sign threshold tau must be positive");
  const ScalarField div = divergence(s);
  const double pull = 2.0 * n * (integrate(u) - 1.0);
  double sum = 0.0;
  for (std::size_t k : u.domain().mask_cells()) {
    if (u[k] > tau) {
      const double r = pull - div[k];
      sum += r * r;
    }
  }
  return std::sqrt(sum) * u.domain().h() / std::max(1.0, std::abs(-pull));
}

inline Certificate build_certificate(const ScalarField& u, const VectorField& s, double n, double tau) {
  if (!(n > 0.0)) throw InvalidArgument("penalty weight n must be positive");
  Certificate c;
  c.n = n;
  c.sign_threshold = tau;
  c.sup_sigma = dual_feasibility(s);
  c.extremality_gap = extremality_gap(s, u);
  c.pde_residual = pde_residual(u, s, n, tau);
  c.mass = integrate(u);
  c.multiplier = multiplier_estimate(u, n);
  c.rayleigh = rayleigh_quotient(u);
  c.energy = total_variation(u) + n * (c.mass - 1.0) * (c.mass - 1.0);
  return c;
}

inline Certificate build_certificate(const ScalarField& u, const VectorField& s, double n) {
  return build_certificate(u, s, n, default_sign_threshold(u));
}

/// Largest pairwise relative difference among multiplier, Rayleigh quotient and energy.
inline double estimator_spread(const Certificate& c) {
  const double lo = std::min({c.multiplier, c.rayleigh, c.energy});
  const double hi = std::max({c.multiplier, c.rayleigh, c.energy});
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return (hi - lo) / lo;
}

inline bool within_limits(const Certificate& c, const CertificateLimits& lim = {}) {
  return c.sup_sigma <= lim.sup_sigma && c.extremality_gap <= lim.extremality_gap &&
         c.pde_residual <= lim.pde_residual && estimator_spread(c) <= lim.estimator_spread;
}

}  // namespace onelap

/**
 * @file  energy.hpp
 * @brief Penalized (1+eps)-regularized total-variation functional.
 *
 *   E(u) = h^2 sum [ (|grad u|^2 + delta^2)^((1+eps)/2) - delta^(1+eps) ]
 *        + n ( h^2 sum u^(1+eps) - 1 )^2
 *
 * At eps = delta = 0 this is TV(u) + n (int u - 1)^2. The delta offset keeps
 * E(0) = n for every parameter choice.
 */
#pragma once

#include <cmath>
#include <string>

#include "onelap/error.hpp"
#include "onelap/grid.hpp"

namespace onelap {

/// Floor added to u before raising it to the power eps in the penalty derivative.
inline constexpr double kPenaltyFloor = 1e-12;

struct PenaltyParams {
  double eps = 0.0;
  double n = 1.0;
  double delta = 0.0;

  void validate() const {
    if (!(eps >= 0.0 && eps <= 1.0)) throw InvalidArgument("eps must lie in [0, 1]");
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("penalty weight n must be positive");
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw InvalidArgument("delta must be non-negative");
  }
};

namespace detail {

inline void require_nonnegative(const ScalarField& u) {
  for (std::size_t k : u.domain().mask_cells()) {
    if (u[k] < 0.0) throw InvalidArgument("field must be non-negative");
  }
}

inline void require_smoothing(const PenaltyParams& p) {
  if (p.delta == 0.0 && p.eps < 1.0) {
    throw InvalidArgument("delta must be positive when eps < 1 (singular weight at zero gradient)");
  }
}

/// (g2 + d^2)^((1+eps)/2) - d^(1+eps), evaluated without cancellation for small g2.
inline double smoothed_power(double g2, const PenaltyParams& p) {
  if (p.delta == 0.0) {
    return p.eps == 0.0 ? std::sqrt(g2) : std::pow(g2, 0.5 * (1.0 + p.eps));
  }
  const double d2 = p.delta * p.delta;
  if (p.eps == 0.0) {
    return g2 / (std::sqrt(g2 + d2) + p.delta);
  }
  const double q = 0.5 * (1.0 + p.eps);
  return std::pow(p.delta, 1.0 + p.eps) * std::expm1(q * std::log1p(g2 / d2));
}

/// (g2 + d^2)^((eps-1)/2), the flux weight.
inline double flux_weight(double g2, const PenaltyParams& p) {
  const double s = g2 + p.delta * p.delta;
  if (p.eps == 0.0) return 1.0 / std::sqrt(s);
  if (p.eps == 1.0) return 1.0;
  return std::exp(0.5 * (p.eps - 1.0) * std::log(s));
}

inline double power_mass(const ScalarField& u, double eps) {
  double sum = 0.0;
  if (eps == 0.0) {
    for (std::size_t k : u.domain().mask_cells()) sum += u[k];
  } else {
    for (std::size_t k : u.domain().mask_cells()) sum += u[k] > 0.0 ? std::pow(u[k], 1.0 + eps) : 0.0;
  }
  return u.domain().cell_area() * sum;
}

}  // namespace detail

/// h^2 sum u^(1+eps); equals integrate(u) at eps = 0.
inline double power_mass(const ScalarField& u, double eps) {
  detail::require_nonnegative(u);
  return detail::power_mass(u, eps);
}

/// Gradient part of the energy only (no penalty).
inline double smoothed_variation(const ScalarField& u, const PenaltyParams& p) {
  const GridDomain& d = u.domain();
  const auto v = u.values();
  const std::size_t nx = static_cast<std::size_t>(d.nx());
  const double inv_h2 = 1.0 / d.cell_area();
  double sum = 0.0;
  for (std::size_t k : d.stencil_cells()) {
    const double a = v[k + 1] - v[k];
    const double b = v[k + nx] - v[k];
    sum += detail::smoothed_power((a * a + b * b) * inv_h2, p);
  }
  return d.cell_area() * sum;
}

/// energy(), also returning its variation part (no validation; for inner loops).
inline double energy_parts(const ScalarField& u, const PenaltyParams& p, double& variation) {
  const double gap = detail::power_mass(u, p.eps) - 1.0;
  variation = smoothed_variation(u, p);
  return variation + p.n * gap * gap;
}

inline double energy(const ScalarField& u, const PenaltyParams& p) {
  p.validate();
  detail::require_nonnegative(u);
  double variation = 0.0;
  return energy_parts(u, p, variation);
}

/// sigma = (|grad u|^2 + delta^2)^((eps-1)/2) grad u, cellwise.
inline VectorField sigma_field(const ScalarField& u, const PenaltyParams& p) {
  p.validate();
  detail::require_smoothing(p);
  const GridDomain& d = u.domain();
  VectorField s(u.domain_ptr());
  const auto v = u.values();
  const std::size_t nx = static_cast<std::size_t>(d.nx());
  const double inv_h = 1.0 / d.h();
  auto sx = s.vx();
  auto sy = s.vy();
  for (std::size_t k : d.stencil_cells()) {
    const double gx = (v[k + 1] - v[k]) * inv_h;
    const double gy = (v[k + nx] - v[k]) * inv_h;
    const double g2 = gx * gx + gy * gy;
    if (g2 == 0.0) continue;
    const double w = detail::flux_weight(g2, p);
    sx[k] = w * gx;
    sy[k] = w * gy;
  }
  return s;
}

/**
 * First variation of energy(), divided by (1 + eps):
 *
 *   -div sigma + 2 n (int u^(1+eps) - 1) (u + floor)^eps
 *
 * This is the Riesz representative in the h^2-weighted inner product, so
 * d/dt energy(u + t v) = (1 + eps) <energy_gradient(u), v>.
 */
inline ScalarField energy_gradient(const ScalarField& u, const PenaltyParams& p) {
  p.validate();
  detail::require_smoothing(p);
  detail::require_nonnegative(u);
  ScalarField g = divergence(sigma_field(u, p));
  const double pull = 2.0 * p.n * (detail::power_mass(u, p.eps) - 1.0);
  auto out = g.values();
  if (p.eps == 0.0) {
    for (std::size_t k : u.domain().mask_cells()) out[k] = pull - out[k];
  } else {
    for (std::size_t k : u.domain().mask_cells()) {
      out[k] = pull * std::pow(u[k] + kPenaltyFloor, p.eps) - out[k];
    }
  }
  return g;
}

}  // namespace onelap

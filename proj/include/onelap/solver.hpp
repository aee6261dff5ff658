/**
 * @file  solver.hpp
 * @brief Minimization of the penalized energy with (eps, n, delta) continuation.
 *
 * Stages with eps > 0 run projected Barzilai-Borwein descent with Armijo
 * backtracking on the smoothed energy. Stages with eps = 0 are penalized
 * total-variation problems and run a first-order primal-dual iteration whose
 * dual variable is the calibration field sigma; see primal_dual_stage().
 */
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "onelap/energy.hpp"
#include "onelap/error.hpp"
#include "onelap/grid.hpp"

namespace onelap {

/// -2 n (int u - 1): the Lagrange multiplier of the mass constraint recovered from the penalty.
inline double multiplier_estimate(const ScalarField& u, double n) { return -2.0 * n * (integrate(u) - 1.0); }

/// TV(u) / int |u| with TV including the boundary trace.
inline double rayleigh_quotient(const ScalarField& u) {
  const double mass = l1_norm(u);
  if (!(mass > 0.0)) throw InvalidArgument("rayleigh quotient of a zero-mass field is undefined");
  return total_variation(u) / mass;
}

struct Stage {
  PenaltyParams params;
  int max_iterations = 5000;
  double tolerance = 1e-6;
};

/// Shape of the default schedules; see ContinuationSchedule::geometric.
struct ScheduleOptions {
  double eps_start = 0.5;
  double eps_factor = 0.5;
  int eps_stages = 4;
  double n_start = 8.0;
  double n_factor = 4.0;
  double delta_scale = 1e-2;
  double delta_floor = 1e-4;
  int max_iterations = 5000;
  double tolerance = 1e-6;

  double delta_for(double eps) const { return delta_scale * eps + delta_floor; }
};

class ContinuationSchedule {
 public:
  ContinuationSchedule() = default;
  explicit ContinuationSchedule(std::vector<Stage> stages) : stages_(std::move(stages)) { validate(); }

  /**
   * eps_k = eps_start * eps_factor^k and n_k = n_start * n_factor^k for
   * k < eps_stages, advanced together, followed by a terminal eps = 0 stage
   * at the last n. eps_stages = 0 leaves only the eps = 0 stage at n_start.
   */
  static ContinuationSchedule geometric(const ScheduleOptions& o) {
    check_options(o);
    std::vector<Stage> st;
    double eps = o.eps_start;
    double n = o.n_start;
    for (int k = 0; k < o.eps_stages; ++k) {
      st.push_back({{eps, n, o.delta_for(eps)}, o.max_iterations, o.tolerance});
      if (k + 1 < o.eps_stages) {
        eps *= o.eps_factor;
        n *= o.n_factor;
      }
    }
    st.push_back({{0.0, n, o.delta_floor}, o.max_iterations, o.tolerance});
    return ContinuationSchedule(std::move(st));
  }

  /**
   * The iterated limit taken one parameter at a time: drive eps to 0 at
   * n_start, then raise n at eps = 0 (eps_stages values of n in total). Every
   * eps = 0 stage is a penalized TV problem with its own multiplier estimate.
   */
  static ContinuationSchedule penalty_sweep(const ScheduleOptions& o) {
    check_options(o);
    if (o.eps_stages < 1) throw InvalidArgument("penalty sweep needs at least one stage");
    std::vector<Stage> st;
    double eps = o.eps_start;
    for (int k = 0; k < o.eps_stages; ++k, eps *= o.eps_factor) {
      st.push_back({{eps, o.n_start, o.delta_for(eps)}, o.max_iterations, o.tolerance});
    }
    double n = o.n_start;
    for (int k = 0; k < o.eps_stages; ++k, n *= o.n_factor) {
      st.push_back({{0.0, n, o.delta_floor}, o.max_iterations, o.tolerance});
    }
    return ContinuationSchedule(std::move(st));
  }

  const std::vector<Stage>& stages() const { return stages_; }
  std::size_t size() const { return stages_.size(); }

  void validate() const {
    if (stages_.empty()) throw InvalidArgument("schedule has no stages");
    for (std::size_t i = 0; i < stages_.size(); ++i) {
      const Stage& s = stages_[i];
      s.params.validate();
      if (s.params.eps < 1.0 && !(s.params.delta > 0.0)) {
        throw InvalidArgument("schedule stage " + std::to_string(i) + ": delta must be positive when eps < 1");
      }
      if (s.max_iterations <= 0 || !(s.tolerance > 0.0)) {
        throw InvalidArgument("schedule stage " + std::to_string(i) +
                              ": iteration cap and tolerance must be positive");
      }
      if (i > 0) {
        const PenaltyParams& prev = stages_[i - 1].params;
        if (s.params.eps > prev.eps) throw InvalidArgument("schedule eps must be non-increasing");
        if (s.params.n < prev.n) throw InvalidArgument("schedule n must be non-decreasing");
        if (s.params.delta > prev.delta) throw InvalidArgument("schedule delta must be non-increasing");
      }
    }
    if (stages_.back().params.eps != 0.0) throw InvalidArgument("schedule must end with an eps = 0 stage");
  }

 private:
  static void check_options(const ScheduleOptions& o) {
    if (!(o.eps_start > 0.0 && o.eps_start <= 1.0)) throw InvalidArgument("eps start must lie in (0, 1]");
    if (!(o.eps_factor > 0.0 && o.eps_factor < 1.0)) throw InvalidArgument("eps factor must lie in (0, 1)");
    if (o.eps_stages < 0) throw InvalidArgument("eps stage count must be non-negative");
    if (!(o.n_start > 0.0)) throw InvalidArgument("n start must be positive");
    if (!(o.n_factor >= 1.0)) throw InvalidArgument("n factor must be >= 1");
    if (!(o.delta_scale >= 0.0) || !(o.delta_floor > 0.0)) {
      throw InvalidArgument("delta scale must be >= 0 and delta floor > 0");
    }
    if (o.max_iterations <= 0 || !(o.tolerance > 0.0)) {
      throw InvalidArgument("iteration cap and tolerance must be positive");
    }
  }

  std::vector<Stage> stages_;
};

/// One accepted step (or the initial state, iteration 0).
struct IterationRecord {
  int stage = 0;
  int iteration = 0;
  double energy = 0.0;
  double grad_norm = 0.0;
  double mass = 0.0;
  double multiplier = 0.0;
};

using IterationObserver = std::function<void(const IterationRecord&)>;

struct StageReport {
  PenaltyParams params;
  double energy = 0.0;
  /// -2 n (int u^(1+eps) - 1), the stage's own constraint multiplier.
  double multiplier = 0.0;
  int iterations = 0;
  /// Projected-gradient norm (eps > 0) or primal-dual residual (eps = 0).
  double grad_norm = 0.0;
  double mass = 0.0;
  bool converged = false;
  double seconds = 0.0;
};

struct StageResult {
  ScalarField u;
  /// Flux (|grad u|^2 + delta^2)^((eps-1)/2) grad u; the dual iterate for eps = 0 stages.
  VectorField sigma;
  StageReport report;
};

struct SolveReport {
  std::vector<StageReport> stages;
  ScalarField u;
  VectorField sigma;
  double multiplier = 0.0;
  double rayleigh = 0.0;
  /// TV(u) + n (int u - 1)^2 at the final n.
  double energy = 0.0;
  double final_n = 0.0;
};

/// Raised when a stage breaks down; carries everything computed up to that point.
class SolveFailure : public NumericalError {
 public:
  SolveFailure(const std::string& what, std::vector<StageReport> completed, ScalarField last)
      : NumericalError(what), completed_(std::move(completed)), last_(std::move(last)) {}
  const std::vector<StageReport>& completed_stages() const { return completed_; }
  const ScalarField& last_field() const { return last_; }

 private:
  std::vector<StageReport> completed_;
  ScalarField last_;
};

namespace detail {

/// sqrt(h^2 sum (u - max(0, u - g))^2).
/**
 * Scale for the relative stopping test: max(1, smoothed variation). It equals
 * the energy up to the penalty term, which is at most lambda near a minimizer
 * but can dwarf everything far from one (large n), where a test relative to
 * the full energy would stop before the first step.
 */
inline double stopping_scale(const ScalarField& u, const PenaltyParams& p) {
  return std::max(1.0, smoothed_variation(u, p));
}

inline double projected_gradient_norm(const ScalarField& u, const ScalarField& g) {
  double sum = 0.0;
  for (std::size_t k : u.domain().mask_cells()) {
    const double step = u[k] - std::max(0.0, u[k] - g[k]);
    sum += step * step;
  }
  return std::sqrt(u.domain().cell_area() * sum);
}

inline bool identically_zero(const ScalarField& u) {
  for (std::size_t k : u.domain().mask_cells()) {
    if (u[k] != 0.0) return false;
  }
  return true;
}

inline IterationRecord make_record(int stage, int it, double e, double residual, const ScalarField& u,
                                   const PenaltyParams& p) {
  return {stage, it, e, residual, integrate(u), -2.0 * p.n * (detail::power_mass(u, p.eps) - 1.0)};
}

inline StageReport finish_report(const PenaltyParams& p, const ScalarField& u, double e, double residual, int it,
                                 bool converged, std::chrono::steady_clock::time_point start) {
  StageReport rep;
  rep.params = p;
  rep.energy = e;
  rep.multiplier = -2.0 * p.n * (detail::power_mass(u, p.eps) - 1.0);
  rep.iterations = it;
  rep.grad_norm = residual;
  rep.mass = integrate(u);
  rep.converged = converged;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline void check_energy(double e, int it, const PenaltyParams& p) {
  if (!std::isfinite(e)) {
    throw NumericalError("non-finite energy at iteration " + std::to_string(it) + " (eps=" + std::to_string(p.eps) +
                         ", n=" + std::to_string(p.n) + ", delta=" + std::to_string(p.delta) + ")");
  }
}

/**
 * Projected BB descent. Each step proposes max(0, u - alpha g) with alpha
 * the BB1 length of the previous step and halves alpha until the Armijo
 * condition (c = 1e-4) holds against the current energy, so accepted
 * energies never increase. Stops on the projected-gradient tolerance, the
 * cap, or when no halving yields a decrease.
 */
inline StageResult descent_stage(const ScalarField& u0, const PenaltyParams& p, int cap, double tol,
                                 const IterationObserver& observer, int stage_index) {
  const auto start = std::chrono::steady_clock::now();
  constexpr double kArmijo = 1e-4;
  constexpr int kMaxHalvings = 60;
  const double slope_scale = (1.0 + p.eps) * u0.domain().cell_area();
  const auto& cells = u0.domain().mask_cells();

  ScalarField u = u0;
  double var = 0.0;
  double e = energy_parts(u, p, var);
  check_energy(e, 0, p);
  ScalarField g = energy_gradient(u, p);
  double pg = projected_gradient_norm(u, g);
  if (observer) observer(make_record(stage_index, 0, e, pg, u, p));

  double gmax = 0.0;
  for (std::size_t k : cells) gmax = std::max(gmax, std::abs(g[k]));
  double alpha = gmax > 0.0 ? 0.01 * std::max(u.max(), 1e-12) / gmax : 1.0;

  ScalarField trial(u.domain_ptr());
  int it = 0;
  bool converged = pg <= tol * std::max(1.0, var);
  while (!converged && it < cap) {
    double e_trial = 0.0;
    double var_trial = 0.0;
    bool accepted = false;
    for (int halving = 0; halving <= kMaxHalvings; ++halving, alpha *= 0.5) {
      auto tv = trial.values();
      double slope = 0.0;
      for (std::size_t k : cells) {
        tv[k] = std::max(0.0, u[k] - alpha * g[k]);
        slope += g[k] * (tv[k] - u[k]);
      }
      slope *= slope_scale;
      if (slope >= 0.0) break;
      e_trial = energy_parts(trial, p, var_trial);
      check_energy(e_trial, it, p);
      if (e_trial <= e + kArmijo * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;

    ScalarField g_new = energy_gradient(trial, p);
    double ss = 0.0, sy = 0.0;
    for (std::size_t k : cells) {
      const double s = trial[k] - u[k];
      ss += s * s;
      sy += s * (g_new[k] - g[k]);
    }
    std::swap(u, trial);
    g = std::move(g_new);
    e = e_trial;
    var = var_trial;
    pg = projected_gradient_norm(u, g);
    ++it;
    if (observer) observer(make_record(stage_index, it, e, pg, u, p));
    converged = pg <= tol * std::max(1.0, var);
    // Non-positive curvature along the step: retry with a doubled length.
    alpha = sy > 0.0 ? ss / sy : 2.0 * alpha;
    alpha = std::clamp(alpha, 1e-20, 1e20);
  }
  VectorField sigma = sigma_field(u, p);
  StageReport rep = finish_report(p, u, e, pg, it, converged, start);
  return {std::move(u), std::move(sigma), rep};
}

/**
 * Proximal map of q -> delta (1 - sqrt(1 - |q|^2)) (the conjugate of
 * sqrt(|g|^2 + delta^2) - delta) with step `a` = sigma * delta, applied to a
 * vector of length z. Returns the new length in [0, 1).
 *
 * Solved in s = sqrt(1 - rho^2): sqrt(1 - s^2) (1 + a / s) = z is strictly
 * decreasing on (0, 1], bracketed Newton.
 */
inline double dual_radius(double z, double a) {
  if (a == 0.0) return std::min(z, 1.0);
  auto f = [&](double s) { return std::sqrt(1.0 - s * s) * (1.0 + a / s) - z; };
  double lo = 0.0, hi = 1.0;  // f(lo+) > 0, f(hi) < 0
  double s = z < 1.0 ? std::sqrt(1.0 - z * z) : std::min(1.0, std::max(a / (z - 1.0 + a), 1e-300));
  s = std::clamp(s, 1e-300, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double fs = f(s);
    if (fs > 0.0) lo = s; else hi = s;
    if (fs == 0.0 || hi - lo <= 1e-16 * hi) break;
    const double r = std::sqrt(1.0 - s * s);
    const double dfs = -(s / r) * (1.0 + a / s) - r * a / (s * s);
    double next = s - fs / dfs;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - s) <= 1e-15 * s) {
      s = next;
      break;
    }
    s = next;
  }
  return std::sqrt(std::max(0.0, 1.0 - s * s));
}

/**
 * Shift c with u = max(0, v - c) minimizing |u - v|^2 / (2 tau) + n (int u - 1)^2:
 * the root of c - 2 n tau (int max(0, v - c) - 1), increasing and concave in c,
 * so Newton settles from the left after one step and stops once the active
 * set is fixed.
 */
inline double penalty_shift(const ScalarField& v, double n, double tau, double c) {
  const auto& cells = v.domain().mask_cells();
  const double h2 = v.domain().cell_area();
  const double w = 2.0 * n * tau;
  for (int i = 0; i < 100; ++i) {
    double sum = 0.0;
    std::size_t active = 0;
    for (std::size_t k : cells) {
      if (v[k] > c) {
        sum += v[k] - c;
        ++active;
      }
    }
    const double psi = c - w * (h2 * sum - 1.0);
    const double next = c - psi / (1.0 + w * h2 * static_cast<double>(active));
    if (std::abs(next - c) <= 1e-15 * std::max(1.0, std::abs(c))) return next;
    c = next;
  }
  return c;
}

/**
 * Primal-dual (Chambolle-Pock) iteration for
 *   min_{u >= 0}  sum_k h^2 f(grad u_k) + n (int u - 1)^2,  f(g) = sqrt(|g|^2 + delta^2) - delta,
 * written as min_u max_q <grad u, q> - F*(q) + G(u). Step sizes satisfy
 * tau sigma = 0.99 h^2 / 8 (|grad|^2 <= 8 / h^2); their ratio adapts to
 * balance the primal and dual residuals with geometrically decaying
 * adaptation strength. The residual reported is |P| + |D| in the h^2-norm.
 */
inline StageResult primal_dual_stage(const ScalarField& u0, const PenaltyParams& p, int cap, double tol,
                                     const IterationObserver& observer, int stage_index,
                                     const VectorField* dual_start) {
  const auto start = std::chrono::steady_clock::now();
  const DomainPtr& dom = u0.domain_ptr();
  const GridDomain& d = *dom;
  const std::size_t nx = static_cast<std::size_t>(d.nx());
  const double h = d.h();
  const double h2 = d.cell_area();
  const auto& mask = d.mask_cells();
  const auto& stencil = d.stencil_cells();

  ScalarField u = u0;
  VectorField q = dual_start != nullptr && *dual_start->domain_ptr() == d ? *dual_start : sigma_field(u0, p);
  {
    // the dual must stay in the open unit ball
    auto qx = q.vx();
    auto qy = q.vy();
    for (std::size_t k = 0; k < qx.size(); ++k) {
      const double m = std::hypot(qx[k], qy[k]);
      if (m >= 1.0) {
        qx[k] *= (1.0 - 1e-12) / m;
        qy[k] *= (1.0 - 1e-12) / m;
      }
    }
  }

  double var = 0.0;
  double e = energy(u, p);
  check_energy(e, 0, p);
  if (observer) observer(make_record(stage_index, 0, e, std::numeric_limits<double>::quiet_NaN(), u, p));

  double ratio = 0.3;  // tau / (h / sqrt 8)
  double adapt = 0.5;
  const double base = h / std::sqrt(8.0);
  double shift = 0.0;
  double residual = std::numeric_limits<double>::infinity();

  ScalarField ubar = u;
  ScalarField u_new(dom);
  ScalarField div_q = divergence(q);
  ScalarField div_q_new(dom);
  std::vector<double> qx_old(q.vx().begin(), q.vx().end());
  std::vector<double> qy_old(q.vy().begin(), q.vy().end());

  int it = 0;
  bool converged = false;
  while (it < cap) {
    const double tau = ratio * base;
    const double sig = 0.99 * base / ratio;
    const double a = sig * p.delta;

    auto qx = q.vx();
    auto qy = q.vy();
    std::copy(qx.begin(), qx.end(), qx_old.begin());
    std::copy(qy.begin(), qy.end(), qy_old.begin());
    const auto ub = ubar.values();
    for (std::size_t k : stencil) {
      const double zx = qx[k] + sig * (ub[k + 1] - ub[k]) / h;
      const double zy = qy[k] + sig * (ub[k + nx] - ub[k]) / h;
      const double z = std::hypot(zx, zy);
      if (z == 0.0) {
        qx[k] = qy[k] = 0.0;
        continue;
      }
      const double scale = dual_radius(z, a) / z;
      qx[k] = zx * scale;
      qy[k] = zy * scale;
    }

    div_q_new = divergence(q);
    auto un = u_new.values();
    for (std::size_t k : mask) un[k] = u[k] + tau * div_q_new[k];
    shift = penalty_shift(u_new, p.n, tau, shift);
    for (std::size_t k : mask) un[k] = std::max(0.0, un[k] - shift);

    // residuals of the optimality system between consecutive iterates
    double pp = 0.0, dd = 0.0;
    for (std::size_t k : mask) {
      const double r = (u[k] - un[k]) / tau + (div_q[k] - div_q_new[k]);
      pp += r * r;
    }
    for (std::size_t k : stencil) {
      const double dux = ((u[k + 1] - un[k + 1]) - (u[k] - un[k])) / h;
      const double duy = ((u[k + nx] - un[k + nx]) - (u[k] - un[k])) / h;
      const double rx = (qx_old[k] - qx[k]) / sig - dux;
      const double ry = (qy_old[k] - qy[k]) / sig - duy;
      dd += rx * rx + ry * ry;
    }
    const double pn = std::sqrt(h2 * pp);
    const double dn = std::sqrt(h2 * dd);

    auto ubv = ubar.values();
    for (std::size_t k : mask) ubv[k] = 2.0 * un[k] - u[k];
    std::swap(u, u_new);
    std::swap(div_q, div_q_new);
    ++it;

    e = energy_parts(u, p, var);
    check_energy(e, it, p);
    residual = pn + dn;
    if (observer) observer(make_record(stage_index, it, e, residual, u, p));
    if (residual <= tol * std::max(1.0, var)) {
      converged = true;
      break;
    }
    if (pn > 1.5 * dn) {
      ratio /= (1.0 - adapt);
      adapt *= 0.95;
    } else if (dn > 1.5 * pn) {
      ratio *= (1.0 - adapt);
      adapt *= 0.95;
    }
  }
  StageReport rep = finish_report(p, u, e, residual, it, converged, start);
  return {std::move(u), std::move(q), rep};
}

}  // namespace detail

/**
 * Minimize energy(., p) over u >= 0 starting from u0.
 *
 * eps > 0 runs projected BB descent (accepted energies non-increasing);
 * eps = 0 runs the primal-dual iteration, optionally warm-started from a dual
 * field. Terminates when the stage residual is <= tol * max(1, variation part of the energy) or
 * after `cap` iterations; cap = 0 returns u0 unchanged.
 */
inline StageResult minimize_stage(const ScalarField& u0, const PenaltyParams& p, int cap, double tol,
                                  const IterationObserver& observer = {}, int stage_index = 0,
                                  const VectorField* dual_start = nullptr) {
  p.validate();
  detail::require_smoothing(p);
  if (cap < 0 || !(tol > 0.0)) throw InvalidArgument("iteration cap must be >= 0 and tolerance > 0");
  u0.check();
  detail::require_nonnegative(u0);
  if (detail::identically_zero(u0)) throw InvalidArgument("initial field is identically zero");
  if (p.eps > 0.0) return detail::descent_stage(u0, p, cap, tol, observer, stage_index);
  return detail::primal_dual_stage(u0, p, cap, tol, observer, stage_index, dual_start);
}

/**
 * Distance-to-boundary bump normalized to unit integral, with every cell
 * scaled by (1 + 1e-3 xi), xi uniform on [-1, 1] drawn from the seed, and
 * renormalized.
 */
inline ScalarField initial_guess(const DomainPtr& domain, std::uint64_t seed) {
  const GridDomain& d = *domain;
  std::vector<Point> exterior;
  for (int j = 0; j < d.ny(); ++j) {
    for (int i = 0; i < d.nx(); ++i) {
      if (d.inside(i, j)) continue;
      if (d.inside(i + 1, j) || d.inside(i - 1, j) || d.inside(i, j + 1) || d.inside(i, j - 1)) {
        exterior.push_back(d.center(i, j));
      }
    }
  }
  ScalarField u(domain);
  auto v = u.values();
  for (std::size_t k : d.mask_cells()) {
    const Point c = d.center(static_cast<int>(k % d.nx()), static_cast<int>(k / d.nx()));
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : exterior) {
      const Point diff = c - q;
      best = std::min(best, dot(diff, diff));
    }
    v[k] = std::sqrt(best);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  for (std::size_t k : d.mask_cells()) v[k] *= 1.0 + 1e-3 * jitter(rng);
  const double mass = integrate(u);
  for (std::size_t k : d.mask_cells()) v[k] /= mass;
  return u;
}

/// Warm-started minimize_stage over every stage of the schedule, starting from u0.
inline SolveReport continuation_solve(ScalarField u0, const ContinuationSchedule& schedule,
                                      const IterationObserver& observer = {}) {
  schedule.validate();
  detail::require_nonnegative(u0);
  ScalarField u = std::move(u0);
  std::optional<VectorField> sigma;
  std::vector<StageReport> reports;
  for (std::size_t s = 0; s < schedule.size(); ++s) {
    const Stage& stage = schedule.stages()[s];
    const VectorField* dual = nullptr;
    if (sigma && s > 0 && schedule.stages()[s - 1].params.eps == 0.0) dual = &*sigma;
    try {
      StageResult r = minimize_stage(u, stage.params, stage.max_iterations, stage.tolerance, observer,
                                     static_cast<int>(s), dual);
      u = std::move(r.u);
      sigma = std::move(r.sigma);
      reports.push_back(r.report);
    } catch (const Error& e) {
      throw SolveFailure("stage " + std::to_string(s) + " failed: " + e.what(), std::move(reports), std::move(u));
    }
  }
  const double n = schedule.stages().back().params.n;
  SolveReport out{std::move(reports), u, std::move(*sigma), 0.0, 0.0, 0.0, n};
  out.multiplier = multiplier_estimate(u, n);
  out.rayleigh = rayleigh_quotient(u);
  out.energy = energy(u, {0.0, n, 0.0});
  return out;
}

inline SolveReport continuation_solve(const DomainPtr& domain, const ContinuationSchedule& schedule,
                                      std::uint64_t seed, const IterationObserver& observer = {}) {
  return continuation_solve(initial_guess(domain, seed), schedule, observer);
}

}  // namespace onelap

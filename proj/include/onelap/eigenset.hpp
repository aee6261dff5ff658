/**
 * @file  eigenset.hpp
 * @brief Superlevel-set sweeps that extract approximate Cheeger sets from an eigenfunction.
 */
#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "onelap/error.hpp"
#include "onelap/grid.hpp"

namespace onelap {

/// Cells of the domain mask where u > t.
inline std::vector<std::uint8_t> superlevel_mask(const ScalarField& u, double t) {
  if (!(t > 0.0)) throw InvalidArgument("superlevel threshold must be positive");
  std::vector<std::uint8_t> m(u.domain().cell_count(), 0);
  for (std::size_t k : u.domain().mask_cells()) m[k] = u[k] > t ? 1 : 0;
  return m;
}

inline ScalarField indicator(const DomainPtr& domain, const std::vector<std::uint8_t>& mask) {
  ScalarField f(domain);
  auto v = f.values();
  for (std::size_t k : domain->mask_cells()) v[k] = mask[k] ? 1.0 : 0.0;
  return f;
}

struct LevelSetSweep {
  std::vector<double> levels;
  std::vector<double> areas;
  /// Discrete TV of the level-set indicator.
  std::vector<double> perimeters;
  std::vector<double> ratios;
  std::size_t best = 0;
  double best_level = 0.0;
  double best_ratio = std::numeric_limits<double>::infinity();
  std::vector<std::uint8_t> best_mask;
};

/// k levels max(u) (i+1)/(k+1), i = 0..k-1; empty levels are skipped.
inline LevelSetSweep ratio_sweep(const ScalarField& u, int k) {
  if (k < 2) throw InvalidArgument("sweep needs at least 2 levels");
  const double top = u.max();
  if (!(top > 0.0)) throw InvalidArgument("sweep of a field with no positive values");
  const DomainPtr& dom = u.domain_ptr();
  LevelSetSweep s;
  for (int i = 0; i < k; ++i) {
    const double t = top * (i + 1) / (k + 1);
    auto mask = superlevel_mask(u, t);
    std::size_t count = 0;
    for (std::size_t c : dom->mask_cells()) count += mask[c];
    if (count == 0) continue;
    const double area = dom->cell_area() * static_cast<double>(count);
    const double per = total_variation(indicator(dom, mask));
    const double ratio = per / area;
    s.levels.push_back(t);
    s.areas.push_back(area);
    s.perimeters.push_back(per);
    s.ratios.push_back(ratio);
    if (ratio < s.best_ratio) {
      s.best = s.levels.size() - 1;
      s.best_ratio = ratio;
      s.best_level = t;
      s.best_mask = std::move(mask);
    }
  }
  if (s.levels.empty()) throw InvalidArgument("every sweep level is empty");
  return s;
}

}  // namespace onelap

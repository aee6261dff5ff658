// Shared helpers for the test suites: small domains, random masks and fields.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "onelap/onelap.hpp"

namespace testing_support {

using namespace onelap;

/// Every cell of an nx x ny core is inside.
inline DomainPtr full_domain(int nx, int ny, double h) {
  return GridDomain::padded(nx, ny, h, {0.0, 0.0}, std::vector<std::uint8_t>(static_cast<std::size_t>(nx) * ny, 1));
}

/// A 4-connected random blob grown cell by cell inside an nx x ny core.
inline DomainPtr random_domain(std::mt19937_64& rng, int nx, int ny, double h, double fill) {
  std::vector<std::uint8_t> core(static_cast<std::size_t>(nx) * ny, 0);
  const std::size_t target = std::max<std::size_t>(1, static_cast<std::size_t>(fill * nx * ny));
  std::vector<std::pair<int, int>> cells{{nx / 2, ny / 2}};
  core[static_cast<std::size_t>(ny / 2) * nx + nx / 2] = 1;
  std::uniform_int_distribution<int> dir(0, 3);
  while (cells.size() < target) {
    std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
    auto [i, j] = cells[pick(rng)];
    const int d = dir(rng);
    i += d == 0 ? 1 : d == 1 ? -1 : 0;
    j += d == 2 ? 1 : d == 3 ? -1 : 0;
    if (i < 0 || j < 0 || i >= nx || j >= ny) continue;
    auto& c = core[static_cast<std::size_t>(j) * nx + i];
    if (!c) {
      c = 1;
      cells.push_back({i, j});
    }
  }
  return GridDomain::padded(nx, ny, h, {0.0, 0.0}, std::move(core));
}

inline ScalarField random_field(std::mt19937_64& rng, const DomainPtr& d, double lo, double hi) {
  std::uniform_real_distribution<double> U(lo, hi);
  ScalarField u(d);
  auto v = u.values();
  for (std::size_t k : d->mask_cells()) v[k] = U(rng);
  return u;
}

/// Random values on every cell, including the exterior ring (vector fields need not vanish there).
inline VectorField random_vector_field(std::mt19937_64& rng, const DomainPtr& d, double scale) {
  std::uniform_real_distribution<double> U(-scale, scale);
  std::vector<double> sx(d->cell_count()), sy(d->cell_count());
  for (auto& x : sx) x = U(rng);
  for (auto& y : sy) y = U(rng);
  return VectorField(d, std::move(sx), std::move(sy));
}

inline ScalarField normalized(ScalarField u) {
  const double m = integrate(u);
  auto v = u.values();
  for (std::size_t k : u.domain().mask_cells()) v[k] /= m;
  return u;
}

}  // namespace testing_support

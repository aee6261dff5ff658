#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace onelap;
using testing_support::full_domain;
using testing_support::random_domain;
using testing_support::random_field;
using testing_support::random_vector_field;

namespace {

// Cell centres of a [-1,1]^2 box split into 2*res cells per side, counted directly.
std::size_t disk_center_count(int res) {
  std::size_t n = 0;
  const double h = 1.0 / res;
  for (int j = 0; j < 2 * res; ++j)
    for (int i = 0; i < 2 * res; ++i) {
      const double x = -1.0 + (i + 0.5) * h, y = -1.0 + (j + 0.5) * h;
      n += x * x + y * y < 1.0;
    }
  return n;
}

ScalarField spike3x3() {
  auto d = full_domain(3, 3, 1.0);
  ScalarField u(d);
  u.set(2, 2, 1.0);  // core centre (1,1) sits at (2,2) after padding
  return u;
}

}  // namespace

TEST(Rasterize, DiskCellCountMatchesCentreCount) {
  auto d = rasterize(Disk{1.0, {0, 0}}, 64);
  const double expected = std::numbers::pi * 64 * 64;
  EXPECT_EQ(d->mask_cells().size(), disk_center_count(64));
  EXPECT_LE(std::abs(d->mask_cells().size() - expected) / expected, 0.02);
}

TEST(Rasterize, UnitSquareFillsGrid) {
  auto d = rasterize(Rectangle{1.0, 1.0}, 16);
  EXPECT_EQ(d->mask_cells().size(), 256u);
  EXPECT_EQ(d->nx(), 18);
  EXPECT_DOUBLE_EQ(d->area(), 1.0);
}

TEST(Rasterize, RejectsBadShapes) {
  EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), InvalidArgument);
  EXPECT_THROW(rasterize(Disk{0.01, {0, 0}}, 64), InvalidArgument);
  EXPECT_THROW(rasterize(Rectangle{1.0, 1.0}, 0.0), InvalidArgument);
}

TEST(GridDomain, RejectsDisconnectedAndBorderMasks) {
  std::vector<std::uint8_t> core(5 * 5, 0);
  core[0] = 1;
  core[24] = 1;
  EXPECT_THROW(GridDomain::padded(5, 5, 1.0, {0, 0}, core), InvalidArgument);
  std::vector<std::uint8_t> touching(4 * 4, 0);
  touching[0] = 1;
  EXPECT_THROW(GridDomain(4, 4, 1.0, {0, 0}, touching), InvalidArgument);
  EXPECT_THROW(GridDomain::padded(3, 3, 1.0, {0, 0}, std::vector<std::uint8_t>(9, 0)), InvalidArgument);
}

TEST(GridDomain, BoundaryCellsAreMaskCellsWithExteriorNeighbour) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto d = random_domain(rng, 10, 9, 0.1, 0.5);
    std::size_t expected = 0;
    for (std::size_t k : d->mask_cells()) {
      const int i = static_cast<int>(k % d->nx()), j = static_cast<int>(k / d->nx());
      expected += !d->inside(i + 1, j) || !d->inside(i - 1, j) || !d->inside(i, j + 1) || !d->inside(i, j - 1);
    }
    EXPECT_EQ(d->boundary_cells().size(), expected);
    for (std::size_t k : d->boundary_cells()) EXPECT_TRUE(d->inside(k));
  }
}

TEST(ScalarField, EnforcesInvariants) {
  auto d = full_domain(3, 3, 1.0);
  std::vector<double> v(d->cell_count(), 0.0);
  v[0] = 1.0;  // exterior
  EXPECT_THROW(ScalarField(d, v), InvalidArgument);
  v[0] = 0.0;
  v[d->index(2, 2)] = std::nan("");
  EXPECT_THROW(ScalarField(d, v), InvalidArgument);
  ScalarField u(d);
  EXPECT_THROW(u.set(0, 0, 1.0), InvalidArgument);
}

TEST(Gradient, ConstantFieldOnlyRimEntries) {
  auto d = full_domain(4, 4, 1.0);
  const double c = 2.5;
  auto g = gradient(ScalarField::constant(d, c));
  for (int j = 1; j <= 4; ++j)
    for (int i = 1; i <= 4; ++i) {
      const std::size_t k = d->index(i, j);
      EXPECT_DOUBLE_EQ(g.vx()[k], i == 4 ? -c : 0.0);
      EXPECT_DOUBLE_EQ(g.vy()[k], j == 4 ? -c : 0.0);
    }
}

TEST(Gradient, CentreSpike) {
  const ScalarField u = spike3x3();
  const GridDomain& d = u.domain();
  auto g = gradient(u);
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 5; ++i) {
      const double m = g.magnitude(d.index(i, j));
      if (i == 2 && j == 2) EXPECT_DOUBLE_EQ(m, std::sqrt(2.0));
      else if ((i == 1 && j == 2) || (i == 2 && j == 1)) EXPECT_DOUBLE_EQ(m, 1.0);
      else EXPECT_EQ(m, 0.0);
    }
  EXPECT_DOUBLE_EQ(total_variation(u), 2.0 + std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(divergence(g)[d.index(2, 2)], -4.0);
}

TEST(Gradient, ZeroField) {
  auto d = full_domain(5, 4, 0.5);
  auto g = gradient(ScalarField(d));
  for (double x : g.vx()) EXPECT_EQ(x, 0.0);
  for (double y : g.vy()) EXPECT_EQ(y, 0.0);
  auto div = divergence(VectorField(d));
  for (double x : div.values()) EXPECT_EQ(x, 0.0);
}

TEST(Divergence, AdjointOfGradientOnRandomMasks) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = random_domain(rng, 8, 8, 0.125 * (1 + trial % 3), 0.6);
    auto u = random_field(rng, d, -1.0, 1.0);
    auto s = random_vector_field(rng, d, 2.0);
    const double defect = inner(gradient(u), s) + inner(u, divergence(s));
    EXPECT_LE(std::abs(defect), 1e-12 * std::max(1.0, norm(u) * norm(s)));
  }
}

TEST(Integrate, Examples) {
  auto d = rasterize(Rectangle{1.0, 1.0}, 16);
  EXPECT_DOUBLE_EQ(integrate(ScalarField::constant(d, 1.0)), 1.0);
  EXPECT_EQ(integrate(ScalarField(d)), 0.0);
  ScalarField half(d);
  for (std::size_t n = 0; n < d->mask_cells().size(); n += 2) half.values()[d->mask_cells()[n]] = 2.0;
  EXPECT_DOUBLE_EQ(integrate(half), 1.0);
}

TEST(TotalVariation, ConstantOnUnitSquareIsRimTerm) {
  auto d = rasterize(Rectangle{1.0, 1.0}, 16);
  const double h = 1.0 / 16;
  // 16 left and 16 bottom exterior cells, 15 right and 15 top rim cells at 1/h,
  // and the top-right corner cell with both differences, sqrt(2)/h.
  EXPECT_NEAR(total_variation(ScalarField::constant(d, 1.0)), h * (62.0 + std::sqrt(2.0)), 1e-14);
  EXPECT_EQ(total_variation(ScalarField(d)), 0.0);
}

TEST(TotalVariation, HomogeneityAndTranslation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto d = random_domain(rng, 9, 7, 0.2, 0.5);
    auto u = random_field(rng, d, 0.0, 3.0);
    EXPECT_GT(total_variation(ScalarField::constant(d, 1.0)), 0.0);
    const double t = 0.37 * (trial + 1);
    EXPECT_NEAR(total_variation(t * u), t * total_variation(u), 1e-12 * t * total_variation(u));
    auto moved = shifted(*d, 3, 2);
    auto v = transfer(u, moved, 3, 2);
    EXPECT_EQ(integrate(v), integrate(u));
    EXPECT_EQ(total_variation(v), total_variation(u));
  }
}

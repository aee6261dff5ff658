#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace onelap;

namespace {

DomainPtr disk16() {
  static DomainPtr d = rasterize(Disk{1.0, {0, 0}}, 16);
  return d;
}

}  // namespace

TEST(Multiplier, Examples) {
  auto d = rasterize(Rectangle{1.0, 1.0}, 16);
  EXPECT_EQ(multiplier_estimate(ScalarField::constant(d, 1.0), 5.0), 0.0);
  EXPECT_NEAR(multiplier_estimate(ScalarField::constant(d, 0.999), 1000.0), 2.0, 1e-9);
}

TEST(RayleighQuotient, ScaleInvariantAndRejectsZeroMass) {
  std::mt19937_64 rng(1);
  auto d = testing_support::random_domain(rng, 8, 8, 0.125, 0.7);
  auto u = testing_support::random_field(rng, d, 0.0, 1.0);
  EXPECT_EQ(rayleigh_quotient(4.0 * u), rayleigh_quotient(u));
  EXPECT_THROW(rayleigh_quotient(ScalarField(d)), InvalidArgument);
}

TEST(Schedule, GeometricDefaults) {
  const auto s = ContinuationSchedule::geometric({});
  ASSERT_EQ(s.size(), 5u);
  const double eps[] = {0.5, 0.25, 0.125, 0.0625, 0.0};
  const double n[] = {8, 32, 128, 512, 512};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(s.stages()[i].params.eps, eps[i]);
    EXPECT_EQ(s.stages()[i].params.n, n[i]);
    EXPECT_DOUBLE_EQ(s.stages()[i].params.delta, 1e-2 * eps[i] + 1e-4);
    EXPECT_EQ(s.stages()[i].max_iterations, 5000);
  }
  ScheduleOptions one;
  one.eps_stages = 0;
  EXPECT_EQ(ContinuationSchedule::geometric(one).size(), 1u);
}

TEST(Schedule, PenaltySweepShape) {
  const auto s = ContinuationSchedule::penalty_sweep({});
  ASSERT_EQ(s.size(), 8u);
  const double n[] = {8, 32, 128, 512};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_GT(s.stages()[i].params.eps, 0.0);
    EXPECT_EQ(s.stages()[i].params.n, 8.0);
    EXPECT_EQ(s.stages()[4 + i].params.eps, 0.0);
    EXPECT_EQ(s.stages()[4 + i].params.n, n[i]);
  }
}

TEST(Schedule, RejectsInvalidStages) {
  auto stage = [](double eps, double n, double delta) { return Stage{{eps, n, delta}, 100, 1e-6}; };
  EXPECT_THROW(ContinuationSchedule(std::vector<Stage>{}), InvalidArgument);
  EXPECT_THROW(ContinuationSchedule({stage(0.1, 8, 1e-3), stage(0.2, 8, 1e-3), stage(0, 8, 1e-4)}), InvalidArgument);
  EXPECT_THROW(ContinuationSchedule({stage(0.1, 8, 1e-3), stage(0, 4, 1e-4)}), InvalidArgument);
  EXPECT_THROW(ContinuationSchedule({stage(0.1, 8, 1e-3), stage(0, 8, 1e-2)}), InvalidArgument);
  EXPECT_THROW(ContinuationSchedule({stage(0.1, 8, 1e-3)}), InvalidArgument);
  EXPECT_THROW(ContinuationSchedule({stage(0, 8, 0.0)}), InvalidArgument);
  EXPECT_THROW(ContinuationSchedule({Stage{{0, 8, 1e-4}, 0, 1e-6}}), InvalidArgument);
  EXPECT_NO_THROW(ContinuationSchedule({stage(0.1, 8, 1e-3), stage(0, 8, 1e-4)}));
}

TEST(InitialGuess, NormalizedPositiveAndSeeded) {
  auto d = disk16();
  auto a = initial_guess(d, 1), b = initial_guess(d, 1), c = initial_guess(d, 2);
  EXPECT_NEAR(integrate(a), 1.0, 1e-14);
  EXPECT_GT(a.min(), 0.0);
  EXPECT_EQ(std::vector<double>(a.values().begin(), a.values().end()),
            std::vector<double>(b.values().begin(), b.values().end()));
  for (std::size_t k : d->mask_cells()) EXPECT_NEAR(c[k] / a[k], 1.0, 2.1e-3);
  EXPECT_GT(l1_distance(a, c), 0.0);
}

TEST(MinimizeStage, DescentFromBump) {
  auto d = disk16();
  const ScalarField u0 = initial_guess(d, 3);
  const PenaltyParams p{0.5, 4.0, 1e-2};
  double prev = std::numeric_limits<double>::infinity();
  int calls = 0;
  auto r = minimize_stage(u0, p, 300, 1e-6, [&](const IterationRecord& rec) {
    EXPECT_LE(rec.energy, prev);
    prev = rec.energy;
    ++calls;
  });
  EXPECT_LT(r.report.energy, energy(u0, p));
  EXPECT_GE(r.u.min(), 0.0);
  EXPECT_LE(r.report.iterations, 300);
  EXPECT_EQ(calls, r.report.iterations + 1);
}

TEST(MinimizeStage, CapZeroIsNoOp) {
  auto d = disk16();
  const ScalarField u0 = initial_guess(d, 1);
  for (double eps : {0.0, 0.5}) {
    auto r = minimize_stage(u0, {eps, 8.0, 1e-2}, 0, 1e-6);
    EXPECT_EQ(r.report.iterations, 0);
    for (std::size_t k = 0; k < u0.values().size(); ++k) EXPECT_EQ(r.u.values()[k], u0.values()[k]);
  }
}

TEST(MinimizeStage, RejectsZeroStart) {
  EXPECT_THROW(minimize_stage(ScalarField(disk16()), {0.5, 8.0, 1e-2}, 10, 1e-6), InvalidArgument);
}

TEST(MinimizeStage, HugePenaltyPinsPowerMass) {
  auto d = disk16();
  for (double eps : {0.0, 0.5}) {
    std::mt19937_64 rng(17);
    auto u0 = testing_support::random_field(rng, d, 0.1, 3.0);
    auto r = minimize_stage(u0, {eps, 1e6, eps > 0 ? 1e-2 : 1e-4}, 3000, 1e-6);
    EXPECT_NEAR(power_mass(r.u, eps), 1.0, 1e-2) << "eps=" << eps;
  }
}

TEST(MinimizeStage, ConvergedStageReplaysBelowTolerance) {
  auto d = disk16();
  const PenaltyParams p{0.5, 8.0, 1e-2};
  const double tol = 1e-5;
  auto r = minimize_stage(initial_guess(d, 1), p, 20000, tol);
  ASSERT_TRUE(r.report.converged);
  // projected gradient: cells held at zero only count when the gradient pushes them down
  const ScalarField g = energy_gradient(r.u, p);
  double sum = 0.0;
  for (std::size_t k : d->mask_cells()) {
    const double c = r.u[k] > 0.0 ? g[k] : std::min(g[k], 0.0);
    sum += c * c;
  }
  EXPECT_LE(std::sqrt(d->cell_area() * sum), tol * detail::stopping_scale(r.u, p));
}

// Below 2n = lambda_1 the scalar model min_t t lambda + n (t - 1)^2 is minimized at t = 0.
TEST(MinimizeStage, CollapsesBelowHalfEigenvalue) {
  auto sq = rasterize(Rectangle{1.0, 1.0}, 16);
  const double lambda = 2.0 + std::sqrt(std::numbers::pi);
  auto r = minimize_stage(initial_guess(sq, 1), {0.0, 1.0, 1e-4}, 3000, 1e-6);
  EXPECT_LE(integrate(r.u), 1e-2);
  // 2n > lambda (and n > lambda): mass settles at 1 - lambda / (2n)
  auto s = minimize_stage(initial_guess(sq, 1), {0.0, 4.0, 1e-4}, 3000, 1e-6);
  EXPECT_NEAR(integrate(s.u), 1.0 - lambda / 8.0, 0.03);
}

// The (1+eps)-stage energy and the eps = 0 energy of the same iterate come together as eps -> 0.
TEST(ContinuationLimit, EpsGapShrinks) {
  auto d = disk16();
  const ScheduleOptions o;
  const auto base = minimize_stage(initial_guess(d, 1), {0.0, 32.0, 1e-4}, 3000, 1e-6);
  double prev = std::numeric_limits<double>::infinity();
  for (double eps : {0.1, 0.05, 0.02, 0.01}) {
    auto r = minimize_stage(base.u, {eps, 32.0, o.delta_for(eps)}, 2000, 1e-6);
    const double e0 = energy(r.u, {0.0, 32.0, 0.0});
    const double gap = std::abs(r.report.energy - e0) / e0;
    EXPECT_LT(gap, prev) << "eps=" << eps;
    prev = gap;
  }
  EXPECT_LE(prev, 0.05);
}

TEST(ContinuationSolve, DiskDefaultScheduleNearTwo) {
  auto d = rasterize(Disk{1.0, {0, 0}}, 32);  // 64 x 64 cells across
  std::vector<int> stages_seen;
  auto rep = continuation_solve(d, ContinuationSchedule::geometric({}), 1, [&](const IterationRecord& r) {
    if (stages_seen.empty() || stages_seen.back() != r.stage) stages_seen.push_back(r.stage);
  });
  EXPECT_GE(rep.multiplier, 1.85);
  EXPECT_LE(rep.multiplier, 2.15);
  EXPECT_EQ(rep.stages.size(), 5u);
  EXPECT_EQ(stages_seen, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(rep.final_n, 512.0);
  EXPECT_GE(rep.u.min(), 0.0);
  EXPECT_GT(rep.u.max(), 0.0);
  EXPECT_TRUE(std::isfinite(rep.rayleigh) && std::isfinite(rep.energy));
  for (const auto& s : rep.stages) {
    EXPECT_LE(s.iterations, 5000);
    EXPECT_GE(s.energy, 0.0);
  }
}

TEST(ContinuationSolve, TwoSeedsAgreeInL1) {
  auto d = disk16();
  const auto sched = ContinuationSchedule::geometric({});
  auto a = continuation_solve(d, sched, 1);
  auto b = continuation_solve(d, sched, 99);
  EXPECT_LE(l1_distance(a.u, b.u), 1e-2 * l1_norm(a.u));
}

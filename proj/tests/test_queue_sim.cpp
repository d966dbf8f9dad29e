#include <gtest/gtest.h>

#include <cmath>

#include "vecalloc/errors.hpp"
#include "vecalloc/queue_sim.hpp"

namespace vecalloc {
namespace {

constexpr double kMu = 1e9 / 12000;

TEST(QueueSim, LightLoadMatchesAnalytic) {
  SimConfig cfg;
  cfg.mu = kMu;
  cfg.lambda = kMu / 10;  // 8,333.33 packets/s
  cfg.measured = 100'000;
  cfg.seed = 42;
  const SimResult r = simulate_mm1(cfg);
  const double analytic = 1.0 / (cfg.mu - cfg.lambda);
  EXPECT_NEAR(analytic, 1.3333e-5, 1e-9);
  EXPECT_LE(std::abs(r.mean_sojourn_s - analytic) / analytic, 0.05);
  EXPECT_EQ(r.packets_measured, 100'000u);
  EXPECT_GT(r.ci95_halfwidth_s, 0);
}

TEST(QueueSim, IdleQueueIsServiceTimeOnly) {
  SimConfig cfg;
  cfg.mu = kMu;
  cfg.lambda = 0;
  cfg.measured = 50'000;
  const SimResult r = simulate_mm1(cfg);
  EXPECT_LE(std::abs(r.mean_sojourn_s * kMu - 1), 0.03);
  // Exponential service: variance equals the squared mean.
  EXPECT_LE(std::abs(r.variance * kMu * kMu - 1), 0.05);
}

TEST(QueueSim, SameSeedSameResult) {
  SimConfig cfg;
  cfg.mu = 1000;
  cfg.lambda = 500;
  cfg.measured = 20'000;
  cfg.seed = 9;
  const SimResult a = simulate_mm1(cfg);
  const SimResult b = simulate_mm1(cfg);
  EXPECT_EQ(a.mean_sojourn_s, b.mean_sojourn_s);
  EXPECT_EQ(a.variance, b.variance);
  EXPECT_EQ(a.ci95_halfwidth_s, b.ci95_halfwidth_s);
  cfg.seed = 10;
  EXPECT_NE(simulate_mm1(cfg).mean_sojourn_s, a.mean_sojourn_s);
}

TEST(QueueSim, UnstableRejected) {
  SimConfig cfg;
  cfg.mu = 1000;
  cfg.lambda = 1000;
  EXPECT_THROW(simulate_mm1(cfg), DomainError);
  cfg.lambda = -1;
  EXPECT_THROW(simulate_mm1(cfg), DomainError);
  cfg.mu = 0;
  cfg.lambda = 0;
  EXPECT_THROW(simulate_mm1(cfg), DomainError);
}

TEST(QueueSim, HeavyLoadWithinConfidence) {
  SimConfig cfg;
  cfg.mu = 1000;
  cfg.lambda = 800;
  cfg.measured = 200'000;
  cfg.seed = 3;
  const SimResult r = simulate_mm1(cfg);
  const double analytic = 1.0 / 200;
  EXPECT_LE(std::abs(r.mean_sojourn_s - analytic), 3 * r.ci95_halfwidth_s);
}

}  // namespace
}  // namespace vecalloc

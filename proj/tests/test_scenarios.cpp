#include <gtest/gtest.h>

#include <cmath>

#include "vecalloc/errors.hpp"
#include "vecalloc/scenarios.hpp"

namespace vecalloc {
namespace {

constexpr double kC = 299'792.458;

TEST(Scenarios, Names) {
  EXPECT_EQ(to_string(ScenarioId::kPowerPropQueue), "power-prop-queue");
  EXPECT_EQ(parse_scenario("power-queue"), ScenarioId::kPowerQueue);
  EXPECT_FALSE(parse_scenario("power"));
  EXPECT_EQ(parse_calibration("global"), CalibrationMode::kGlobal);
}

TEST(Scenarios, WeightShapes) {
  const Architecture arch = default_architecture();
  const TaskSet ts = scaled_taskset(550);
  const auto ref = calibration_reference(arch, ts);
  const Weights pp = calibrated_weights(ScenarioId::kPowerProp, ref);
  const Weights pq = calibrated_weights(ScenarioId::kPowerQueue, ref);
  const Weights ppq = calibrated_weights(ScenarioId::kPowerPropQueue, ref);
  EXPECT_EQ(pp.alpha, 1);
  EXPECT_GT(pp.beta, 0);
  EXPECT_EQ(pp.gamma, 0);
  EXPECT_EQ(pq.alpha, 1);
  EXPECT_EQ(pq.beta, 0);
  EXPECT_GT(pq.gamma, 0);
  EXPECT_EQ(ppq.alpha, 1);
  EXPECT_GT(ppq.beta, 0);
  EXPECT_GT(ppq.gamma, 0);
  EXPECT_EQ(ppq.provenance, WeightProvenance::kCalibrated);
  EXPECT_EQ(ppq.scenario, "power-prop-queue");
}

TEST(Scenarios, SingleTaskCalibration) {
  const Architecture arch = default_architecture();
  const TaskSet ts({{"t1", 100, 10}});
  const auto ref = calibration_reference(arch, ts);
  const double p0 = 6.125 + (1.5 + 10 / 72.2) + (4.8 + 6.2 * 0.01);
  const double r0 = 0.05 / kC;
  EXPECT_NEAR(ref.optimum.power_w, p0, 1e-12);
  EXPECT_NEAR(ref.optimum.power_w, 12.626, 1e-3);
  EXPECT_NEAR(ref.prop_scale_s, r0, 1e-20);
  const Weights w = calibrated_weights(ScenarioId::kPowerProp, ref);
  EXPECT_NEAR(w.beta, p0 / r0, 1e-9 * p0 / r0);
}

TEST(Scenarios, EqualImportanceAtReference) {
  const Architecture arch = default_architecture();
  for (double t : {100.0, 550.0, 900.0}) {
    const auto ref = calibration_reference(arch, scaled_taskset(t));
    const Weights w = calibrated_weights(ScenarioId::kPowerPropQueue, ref);
    const double p = w.alpha * ref.optimum.power_w;
    EXPECT_NEAR(w.beta * ref.optimum.prop_s, p, 1e-9 * p);
    EXPECT_NEAR(w.gamma * ref.optimum.queue_s, p, 1e-9 * p);
  }
}

TEST(Scenarios, ZeroPropagationFallsBackToSinglePlacements) {
  Architecture arch = default_architecture();
  for (auto& u : arch.units)
    if (u.layer == Layer::kVN) u.access_path.back().link.distance_km = 0;
  const TaskSet ts({{"t1", 100, 10}});
  const auto ref = calibration_reference(arch, ts);
  EXPECT_EQ(ref.optimum.prop_s, 0.0);
  // Largest propagation over every unit is the CC path.
  const double cc = 0.5 / (kC * 2 / 3) + 10 / (kC * 2 / 3) + 10 / (kC * 2 / 3) +
                    50 / (kC * 2 / 3) + 100 / (kC * 2 / 3);
  EXPECT_NEAR(ref.prop_scale_s, cc, 1e-15);
  EXPECT_GT(calibrated_weights(ScenarioId::kPowerProp, ref).beta, 0);
}

TEST(Scenarios, InfeasibleCalibrationThrows) {
  EXPECT_THROW(calibration_reference(default_architecture(), TaskSet({{"x", 1e7, 1e5}})),
               InfeasibleError);
}

TEST(Sweep, PointsSortedAndRecomputable) {
  const Architecture arch = default_architecture();
  const double pts[] = {700, 100, 400};
  const auto res = run_sweep(arch, ScenarioId::kPowerPropQueue, pts);
  ASSERT_EQ(res.points.size(), 3u);
  EXPECT_EQ(res.points[0].traffic_mbps, 100);
  EXPECT_EQ(res.points[2].traffic_mbps, 700);
  for (const auto& p : res.points) {
    ASSERT_TRUE(p.feasible);
    const auto o = evaluate(arch, p.tasks, p.allocation, p.weights);
    EXPECT_EQ(o.scalar, p.objective.scalar);
    EXPECT_EQ(o.power_w, p.objective.power_w);
    std::size_t n = 0;
    for (auto c : p.layers) n += c;
    EXPECT_EQ(n, p.tasks.size());
  }
}

TEST(Sweep, InfeasiblePointIsRecorded) {
  const Architecture full = default_architecture();
  const std::size_t keep[] = {0};
  const Architecture arch = full.restricted_to(keep);
  const double pts[] = {50, 400};
  const auto res = run_sweep(arch, ScenarioId::kPowerProp, pts);
  EXPECT_TRUE(res.points[0].feasible);
  EXPECT_FALSE(res.points[1].feasible);
  EXPECT_FALSE(res.points[1].note.empty());
}

TEST(Sweep, ManualWeightsReproduceCalibratedRun) {
  const Architecture arch = default_architecture();
  const double pts[] = {550};
  const auto cal = run_sweep(arch, ScenarioId::kPowerPropQueue, pts);
  SweepOptions manual;
  manual.manual_weights = cal.points[0].weights;
  const auto again = run_sweep(arch, ScenarioId::kPowerPropQueue, pts, manual);
  EXPECT_EQ(again.points[0].allocation, cal.points[0].allocation);
  EXPECT_EQ(again.points[0].objective.scalar, cal.points[0].objective.scalar);
}

TEST(Sweep, ParallelEqualsSerial) {
  const Architecture arch = default_architecture();
  const auto pts = default_traffic_points();
  SweepOptions par;
  par.jobs = 4;
  const auto a = run_sweeps(arch, kAllScenarios, pts);
  const auto b = run_sweeps(arch, kAllScenarios, pts, par);
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_EQ(a[s].points[i].allocation, b[s].points[i].allocation);
      EXPECT_EQ(a[s].points[i].objective.scalar, b[s].points[i].objective.scalar);
    }
}

TEST(Sweep, GlobalCalibrationSharesWeights) {
  const Architecture arch = default_architecture();
  const double pts[] = {200, 800};
  SweepOptions opt;
  opt.calibration = CalibrationMode::kGlobal;
  const auto res = run_sweep(arch, ScenarioId::kPowerPropQueue, pts, opt);
  EXPECT_EQ(res.points[0].weights.beta, res.points[1].weights.beta);
  EXPECT_EQ(res.points[0].weights.gamma, res.points[1].weights.gamma);
  const Weights w = calibrate(arch, scaled_taskset(550), ScenarioId::kPowerPropQueue);
  EXPECT_EQ(res.points[0].weights.beta, w.beta);
}

TEST(Sweep, PowerPropKeepsLowTrafficOnVns) {
  const Architecture arch = default_architecture();
  const double pts[] = {100, 200, 300};
  for (const auto& p : run_sweep(arch, ScenarioId::kPowerProp, pts).points) {
    EXPECT_EQ(p.layers[0], p.tasks.size()) << p.traffic_mbps;
  }
}

}  // namespace
}  // namespace vecalloc

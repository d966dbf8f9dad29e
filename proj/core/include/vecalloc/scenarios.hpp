#ifndef VECALLOC_SCENARIOS_HPP
#define VECALLOC_SCENARIOS_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vecalloc/allocator.hpp"

namespace vecalloc {

enum class ScenarioId {
  kPowerProp,       // alpha P + beta R
  kPowerQueue,      // alpha P + gamma Q
  kPowerPropQueue,  // alpha P + beta R + gamma Q
};

inline constexpr std::array<ScenarioId, 3> kAllScenarios{
    ScenarioId::kPowerProp, ScenarioId::kPowerQueue, ScenarioId::kPowerPropQueue};

std::string_view to_string(ScenarioId id);  // "power-prop", ...
std::optional<ScenarioId> parse_scenario(std::string_view s);

bool includes_prop(ScenarioId id);
bool includes_queue(ScenarioId id);

enum class Solver { kBnb, kExhaustive };
SolveReport solve(const Architecture& arch, const TaskSet& tasks, const Weights& w,
                  Solver solver, const ModelOptions& options = {});

/// The power-only optimum a scenario is calibrated against, and the delay
/// scales read from it.
struct CalibrationReference {
  ObjectiveBreakdown optimum;  // solved with weights (1, 0, 0)
  Allocation allocation;
  double prop_scale_s = 0.0;   // R0, or the fallback when R0 = 0
  double queue_scale_s = 0.0;  // Q0, or the fallback when Q0 = 0
};

/// Throws InfeasibleError when the task set has no feasible allocation.
CalibrationReference calibration_reference(const Architecture& arch, const TaskSet& tasks,
                                           Solver solver = Solver::kBnb,
                                           const ModelOptions& options = {});

/// alpha = 1; beta = P0/R0 if the scenario has R, else 0; gamma = P0/Q0 if it
/// has Q, else 0. A zero R0 or Q0 falls back to the largest R or Q over the
/// feasible all-on-one-unit placements.
Weights calibrated_weights(ScenarioId id, const CalibrationReference& ref);

Weights calibrate(const Architecture& arch, const TaskSet& tasks, ScenarioId id,
                  Solver solver = Solver::kBnb, const ModelOptions& options = {});

enum class CalibrationMode {
  kPerPoint,  // recalibrate at every traffic point
  kGlobal,    // calibrate once on the 550 Mb/s task set
};
inline constexpr double kGlobalCalibrationMbps = 550.0;

std::string_view to_string(CalibrationMode mode);
std::optional<CalibrationMode> parse_calibration(std::string_view s);

using LayerCounts = std::array<std::size_t, kLayerCount>;
LayerCounts layer_counts(const Architecture& arch, const Allocation& alloc);

struct SweepPoint {
  double traffic_mbps = 0.0;
  bool feasible = false;
  std::string note;  // reason when infeasible
  TaskSet tasks;
  Weights weights;
  ObjectiveBreakdown objective;
  Allocation allocation;
  LayerCounts layers{};
};

struct SweepResult {
  ScenarioId scenario = ScenarioId::kPowerProp;
  std::vector<SweepPoint> points;  // ascending traffic
};

struct SweepOptions {
  CalibrationMode calibration = CalibrationMode::kPerPoint;
  Solver solver = Solver::kBnb;
  SweepMode workload = SweepMode::kScaled;
  // When set, each point uses this many tasks cycling the reference shapes
  // instead of `workload`.
  std::optional<std::size_t> task_count;
  ModelOptions model;
  // Replaces calibration entirely when set.
  std::optional<Weights> manual_weights;
  // Sweep points solved concurrently; results are identical for any value.
  unsigned jobs = 1;
};

std::vector<SweepResult> run_sweeps(const Architecture& arch, std::span<const ScenarioId> ids,
                                    std::span<const double> traffic_mbps,
                                    const SweepOptions& options = {});

SweepResult run_sweep(const Architecture& arch, ScenarioId id,
                      std::span<const double> traffic_mbps, const SweepOptions& options = {});

}  // namespace vecalloc

#endif  // VECALLOC_SCENARIOS_HPP

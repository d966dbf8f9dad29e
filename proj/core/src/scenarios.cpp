#include "vecalloc/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "vecalloc/errors.hpp"

namespace vecalloc {
namespace {

// Runs body(0..count-1) on up to `jobs` threads. The first exception thrown
// by any task is rethrown after all threads join.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

TaskSet taskset_for(double traffic, const SweepOptions& options) {
  if (options.task_count) return cyclic_taskset(*options.task_count, traffic);
  return options.workload == SweepMode::kScaled ? scaled_taskset(traffic)
                                                : fixed_size_taskset(traffic);
}

}  // namespace

std::string_view to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::kPowerProp:
      return "power-prop";
    case ScenarioId::kPowerQueue:
      return "power-queue";
    case ScenarioId::kPowerPropQueue:
      return "power-prop-queue";
  }
  return "?";
}

std::optional<ScenarioId> parse_scenario(std::string_view s) {
  for (ScenarioId id : kAllScenarios)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

bool includes_prop(ScenarioId id) { return id != ScenarioId::kPowerQueue; }
bool includes_queue(ScenarioId id) { return id != ScenarioId::kPowerProp; }

std::string_view to_string(CalibrationMode mode) {
  return mode == CalibrationMode::kPerPoint ? "per-point" : "global";
}

std::optional<CalibrationMode> parse_calibration(std::string_view s) {
  if (s == "per-point") return CalibrationMode::kPerPoint;
  if (s == "global") return CalibrationMode::kGlobal;
  return std::nullopt;
}

SolveReport solve(const Architecture& arch, const TaskSet& tasks, const Weights& w,
                  Solver solver, const ModelOptions& options) {
  return solver == Solver::kBnb ? solve_bnb(arch, tasks, w, options)
                                : solve_exhaustive(arch, tasks, w, options);
}

CalibrationReference calibration_reference(const Architecture& arch, const TaskSet& tasks,
                                           Solver solver, const ModelOptions& options) {
  Weights power_only;
  power_only.beta = power_only.gamma = 0.0;
  const SolveReport report = solve(arch, tasks, power_only, solver, options);
  if (report.proof == Proof::kInfeasible)
    throw InfeasibleError("no feasible allocation for the calibration task set");

  CalibrationReference ref;
  ref.optimum = report.objective;
  ref.allocation = report.best;
  ref.prop_scale_s = ref.optimum.prop_s;
  ref.queue_scale_s = ref.optimum.queue_s;

  if (ref.prop_scale_s == 0.0 || ref.queue_scale_s == 0.0) {
    double max_r = 0.0;
    double max_q = 0.0;
    for (std::size_t u = 0; u < arch.units.size(); ++u) {
      const Allocation all_on_u{std::vector<std::size_t>(tasks.size(), u)};
      try {
        const auto obj = evaluate(arch, tasks, all_on_u, power_only, options);
        max_r = std::max(max_r, obj.prop_s);
        max_q = std::max(max_q, obj.queue_s);
      } catch (const InfeasibleError&) {
      }
    }
    if (ref.prop_scale_s == 0.0) ref.prop_scale_s = max_r;
    if (ref.queue_scale_s == 0.0) ref.queue_scale_s = max_q;
  }
  return ref;
}

Weights calibrated_weights(ScenarioId id, const CalibrationReference& ref) {
  Weights w;
  w.alpha = 1.0;
  const double p0 = ref.optimum.power_w;
  if (includes_prop(id) && ref.prop_scale_s > 0) w.beta = p0 / ref.prop_scale_s;
  if (includes_queue(id) && ref.queue_scale_s > 0) w.gamma = p0 / ref.queue_scale_s;
  w.provenance = WeightProvenance::kCalibrated;
  w.scenario = std::string(to_string(id));
  return w;
}

Weights calibrate(const Architecture& arch, const TaskSet& tasks, ScenarioId id, Solver solver,
                  const ModelOptions& options) {
  return calibrated_weights(id, calibration_reference(arch, tasks, solver, options));
}

LayerCounts layer_counts(const Architecture& arch, const Allocation& alloc) {
  LayerCounts counts{};
  for (std::size_t u : alloc.unit_of_task) ++counts[static_cast<std::size_t>(arch.units[u].layer)];
  return counts;
}

std::vector<SweepResult> run_sweeps(const Architecture& arch, std::span<const ScenarioId> ids,
                                    std::span<const double> traffic_mbps,
                                    const SweepOptions& options) {
  std::vector<double> points(traffic_mbps.begin(), traffic_mbps.end());
  std::sort(points.begin(), points.end());

  std::vector<TaskSet> tasksets;
  for (double t : points) tasksets.push_back(taskset_for(t, options));

  // Calibration references, shared by every scenario at a point.
  std::vector<std::optional<CalibrationReference>> refs(points.size());
  std::vector<std::string> ref_errors(points.size());
  if (!options.manual_weights) {
    if (options.calibration == CalibrationMode::kGlobal) {
      const auto global = calibration_reference(
          arch, taskset_for(kGlobalCalibrationMbps, options), options.solver,
          options.model);
      for (auto& r : refs) r = global;
    } else {
      parallel_for(points.size(), options.jobs, [&](std::size_t i) {
        try {
          refs[i] = calibration_reference(arch, tasksets[i], options.solver, options.model);
        } catch (const InfeasibleError& e) {
          ref_errors[i] = e.what();
        }
      });
    }
  }

  std::vector<SweepResult> results(ids.size());
  for (std::size_t s = 0; s < ids.size(); ++s) {
    results[s].scenario = ids[s];
    results[s].points.resize(points.size());
  }

  parallel_for(ids.size() * points.size(), options.jobs, [&](std::size_t job) {
    const std::size_t s = job / points.size();
    const std::size_t i = job % points.size();
    SweepPoint& row = results[s].points[i];
    row.traffic_mbps = points[i];
    row.tasks = tasksets[i];

    if (options.manual_weights) {
      row.weights = *options.manual_weights;
    } else if (refs[i]) {
      row.weights = calibrated_weights(ids[s], *refs[i]);
    } else {
      row.note = ref_errors[i];
      return;
    }

    const SolveReport report =
        solve(arch, tasksets[i], row.weights, options.solver, options.model);
    if (report.proof == Proof::kInfeasible) {
      row.note = "no feasible allocation";
      return;
    }
    row.feasible = true;
    row.objective = report.objective;
    row.allocation = report.best;
    row.layers = layer_counts(arch, report.best);
  });
  return results;
}

SweepResult run_sweep(const Architecture& arch, ScenarioId id,
                      std::span<const double> traffic_mbps, const SweepOptions& options) {
  const ScenarioId ids[] = {id};
  return std::move(run_sweeps(arch, ids, traffic_mbps, options).front());
}

}  // namespace vecalloc

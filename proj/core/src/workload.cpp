#include "vecalloc/workload.hpp"

#include <cmath>

#include "vecalloc/errors.hpp"

namespace vecalloc {
namespace {

constexpr int kReferenceTasks = 10;
constexpr double kReferenceTotalMbps = 550.0;

void require_target(double target_mbps) {
  if (!(target_mbps > 0) || !std::isfinite(target_mbps))
    throw DomainError("traffic target must be positive, got " + std::to_string(target_mbps));
}

}  // namespace

TaskSet::TaskSet(std::vector<Task> tasks) : tasks_(std::move(tasks)) {
  for (const auto& t : tasks_) {
    if (!(t.mips > 0) || !(t.traffic_mbps > 0))
      throw DomainError("task '" + t.id + "' must have positive MIPS and traffic");
    total_mips_ += t.mips;
    total_traffic_mbps_ += t.traffic_mbps;
  }
}

TaskSet reference_taskset() {
  std::vector<Task> tasks;
  for (int i = 1; i <= kReferenceTasks; ++i)
    tasks.push_back({"t" + std::to_string(i), 100.0 * i, 10.0 * i});
  return TaskSet(std::move(tasks));
}

TaskSet scaled_taskset(double target_mbps) {
  require_target(target_mbps);
  std::vector<Task> tasks;
  for (int i = 1; i <= kReferenceTasks; ++i) {
    const double traffic = 10.0 * i * target_mbps / kReferenceTotalMbps;
    tasks.push_back({"t" + std::to_string(i), kMipsPerMbps * traffic, traffic});
  }
  return TaskSet(std::move(tasks));
}

TaskSet fixed_size_taskset(double target_mbps) {
  require_target(target_mbps);
  std::vector<Task> tasks;
  double total = 0.0;
  for (int k = 0;; ++k) {
    const double traffic = 10.0 * (k % kReferenceTasks + 1);
    const double left = target_mbps - total;
    const bool last = traffic >= left;
    const double take = last ? left : traffic;
    tasks.push_back({"t" + std::to_string(k + 1), kMipsPerMbps * take, take});
    total += take;
    if (last) break;
  }
  return TaskSet(std::move(tasks));
}

TaskSet cyclic_taskset(std::size_t count, double target_mbps) {
  require_target(target_mbps);
  double shape_total = 0.0;
  for (std::size_t k = 0; k < count; ++k) shape_total += 10.0 * (k % kReferenceTasks + 1);
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < count; ++k) {
    const double traffic = 10.0 * (k % kReferenceTasks + 1) * target_mbps / shape_total;
    tasks.push_back({"t" + std::to_string(k + 1), kMipsPerMbps * traffic, traffic});
  }
  return TaskSet(std::move(tasks));
}

std::vector<TaskSet> sweep_tasksets(std::span<const double> targets_mbps, SweepMode mode) {
  std::vector<TaskSet> out;
  out.reserve(targets_mbps.size());
  for (double t : targets_mbps)
    out.push_back(mode == SweepMode::kScaled ? scaled_taskset(t) : fixed_size_taskset(t));
  return out;
}

std::vector<double> default_traffic_points() {
  std::vector<double> points;
  for (int i = 1; i <= 10; ++i) points.push_back(100.0 * i);
  return points;
}

}  // namespace vecalloc

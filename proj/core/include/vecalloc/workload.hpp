#ifndef VECALLOC_WORKLOAD_HPP
#define VECALLOC_WORKLOAD_HPP

#include <span>
#include <string>
#include <vector>

namespace vecalloc {

/// Indivisible unit of work: it runs on exactly one processing unit.
struct Task {
  std::string id;
  double mips = 0.0;
  double traffic_mbps = 0.0;

  bool operator==(const Task&) const = default;
};

class TaskSet {
 public:
  TaskSet() = default;
  explicit TaskSet(std::vector<Task> tasks);

  const std::vector<Task>& tasks() const { return tasks_; }
  std::size_t size() const { return tasks_.size(); }
  bool empty() const { return tasks_.empty(); }
  const Task& operator[](std::size_t i) const { return tasks_[i]; }

  double total_mips() const { return total_mips_; }
  double total_traffic_mbps() const { return total_traffic_mbps_; }

  bool operator==(const TaskSet& other) const { return tasks_ == other.tasks_; }

 private:
  std::vector<Task> tasks_;
  double total_mips_ = 0.0;
  double total_traffic_mbps_ = 0.0;
};

/// Ten tasks, task i = (100 i MIPS, 10 i Mb/s): 5500 MIPS, 550 Mb/s in total.
TaskSet reference_taskset();

enum class SweepMode {
  // The ten-task shape scaled so the total traffic hits the target.
  kScaled,
  // Unscaled task sizes cycled 1..10 until the target is reached; the last
  // task carries the remainder.
  kFixedSizes,
};

inline constexpr double kMipsPerMbps = 10.0;

/// One TaskSet per total-traffic target (Mb/s). Throws DomainError on a
/// non-positive target.
std::vector<TaskSet> sweep_tasksets(std::span<const double> targets_mbps,
                                    SweepMode mode = SweepMode::kScaled);

TaskSet scaled_taskset(double target_mbps);
TaskSet fixed_size_taskset(double target_mbps);

/// `count` tasks cycling through the ten reference shapes, scaled to
/// `target_mbps` total traffic.
TaskSet cyclic_taskset(std::size_t count, double target_mbps);

/// The reference totals 100, 200, ..., 1000 Mb/s.
std::vector<double> default_traffic_points();

}  // namespace vecalloc

#endif  // VECALLOC_WORKLOAD_HPP

#ifndef VECALLOC_MODEL_HPP
#define VECALLOC_MODEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vecalloc/topology.hpp"
#include "vecalloc/workload.hpp"

namespace vecalloc {

/// Total assignment task -> processing unit (index into Architecture::units).
struct Allocation {
  std::vector<std::size_t> unit_of_task;

  bool operator==(const Allocation&) const = default;
};

enum class DelayAveraging {
  kTaskMean,      // unweighted mean over tasks
  kTrafficWeighted,
};

enum class QueueAggregation {
  kPerInterface,  // each AP interface queues only its own traffic
  kPerDevice,     // AP interfaces see the AP's total traffic
};

struct ModelOptions {
  DelayAveraging averaging = DelayAveraging::kTaskMean;
  QueueAggregation ap_queue = QueueAggregation::kPerInterface;

  bool operator==(const ModelOptions&) const = default;
};

// Relative slack on "load <= capacity" checks so that a sweep point whose
// total lands exactly on a rating is not rejected by rounding.
inline constexpr double kCapacityTolerance = 1e-9;

/// Aggregated demand per device: MIPS on processors, bit/s on network
/// devices. Metering devices accumulate the load of every metered device.
struct DeviceLoads {
  std::vector<double> load;
  std::vector<std::size_t> tasks;     // tasks whose path or processor uses the device
  std::vector<double> task_weight;    // sum of averaging weights of those tasks

  explicit DeviceLoads(std::size_t devices = 0)
      : load(devices, 0.0), tasks(devices, 0), task_weight(devices, 0.0) {}
};

/// Averaging weight of one task (1 for the task mean, its traffic otherwise).
double averaging_weight(const Task& task, DelayAveraging averaging);

/// Adds (sign = +1) or removes (sign = -1) one task's demand.
void apply_task(const Architecture& arch, const ProcessingUnit& unit, const Task& task,
                DelayAveraging averaging, DeviceLoads& loads, int sign = +1);

DeviceLoads aggregate_loads(const Architecture& arch, const TaskSet& tasks,
                            const Allocation& alloc,
                            DelayAveraging averaging = DelayAveraging::kTaskMean);

/// Index of the device whose load defines the M/M/1 arrival rate of `device`.
std::size_t queue_load_source(const Architecture& arch, std::size_t device,
                              QueueAggregation aggregation);

struct FeasibilityIssue {
  std::string device;
  std::string constraint;
  double load = 0.0;
  double limit = 0.0;

  std::string describe() const;
};

/// First violated constraint, if any: processor MIPS <= capacity, device
/// traffic <= capacity (per-adapter and AP ratings included), and strict
/// queue stability lambda < mu.
std::optional<FeasibilityIssue> find_violation(const Architecture& arch,
                                               const DeviceLoads& loads,
                                               QueueAggregation aggregation =
                                                   QueueAggregation::kPerInterface);

/// Throws InfeasibleError unless the allocation is total and feasible.
void require_feasible(const Architecture& arch, const TaskSet& tasks, const Allocation& alloc,
                      const ModelOptions& options = {});

}  // namespace vecalloc

#endif  // VECALLOC_MODEL_HPP

#include "vecalloc/model.hpp"

#include <sstream>

#include "vecalloc/errors.hpp"

namespace vecalloc {

double averaging_weight(const Task& task, DelayAveraging averaging) {
  return averaging == DelayAveraging::kTaskMean ? 1.0 : task.traffic_mbps;
}

void apply_task(const Architecture& arch, const ProcessingUnit& unit, const Task& task,
                DelayAveraging averaging, DeviceLoads& loads, int sign) {
  const double bps = task.traffic_mbps * 1e6 * sign;
  const double w = averaging_weight(task, averaging) * sign;
  auto touch = [&](std::size_t d, double amount) {
    loads.load[d] += amount;
    loads.task_weight[d] += w;
    if (sign > 0) {
      ++loads.tasks[d];
    } else if (--loads.tasks[d] == 0) {
      // No rounding residue on an idle device.
      loads.load[d] = 0.0;
      loads.task_weight[d] = 0.0;
    }
  };
  touch(unit.processor, task.mips * sign);
  for (const auto& hop : unit.access_path) {
    touch(hop.device, bps);
    if (const auto& meter = arch.devices[hop.device].power_meter) touch(*meter, bps);
  }
}

DeviceLoads aggregate_loads(const Architecture& arch, const TaskSet& tasks,
                            const Allocation& alloc, DelayAveraging averaging) {
  if (alloc.unit_of_task.size() != tasks.size())
    throw InfeasibleError("allocation covers " + std::to_string(alloc.unit_of_task.size()) +
                          " of " + std::to_string(tasks.size()) + " tasks");
  DeviceLoads loads(arch.devices.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const std::size_t u = alloc.unit_of_task[t];
    if (u >= arch.units.size())
      throw InfeasibleError("task '" + tasks[t].id + "' assigned to unknown unit " +
                            std::to_string(u));
    apply_task(arch, arch.units[u], tasks[t], averaging, loads);
  }
  return loads;
}

std::size_t queue_load_source(const Architecture& arch, std::size_t device,
                              QueueAggregation aggregation) {
  const auto& meter = arch.devices[device].power_meter;
  if (aggregation == QueueAggregation::kPerDevice && meter) return *meter;
  return device;
}

std::string FeasibilityIssue::describe() const {
  std::ostringstream os;
  os << constraint << " violated on '" << device << "' (load " << load << ", limit " << limit
     << ")";
  return os.str();
}

std::optional<FeasibilityIssue> find_violation(const Architecture& arch,
                                               const DeviceLoads& loads,
                                               QueueAggregation aggregation) {
  for (std::size_t d = 0; d < arch.devices.size(); ++d) {
    const auto& dev = arch.devices[d];
    const double load = loads.load[d];
    if (load > dev.capacity * (1.0 + kCapacityTolerance))
      return FeasibilityIssue{dev.name, dev.is_processor() ? "processing capacity" : "capacity",
                              load, dev.capacity};
    if (dev.is_queue() && loads.tasks[d] > 0) {
      const double lambda = loads.load[queue_load_source(arch, d, aggregation)];
      if (!(lambda < dev.service_rate_bps))
        return FeasibilityIssue{dev.name, "queue stability", lambda, dev.service_rate_bps};
    }
  }
  return std::nullopt;
}

void require_feasible(const Architecture& arch, const TaskSet& tasks, const Allocation& alloc,
                      const ModelOptions& options) {
  const DeviceLoads loads = aggregate_loads(arch, tasks, alloc, options.averaging);
  if (auto issue = find_violation(arch, loads, options.ap_queue))
    throw InfeasibleError(issue->describe());
}

}  // namespace vecalloc

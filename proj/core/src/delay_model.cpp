#include "vecalloc/delay_model.hpp"

#include <cmath>
#include <ostream>

#include "vecalloc/csv.hpp"
#include "vecalloc/errors.hpp"

namespace vecalloc {

double propagation_delay(double distance_km, Medium medium, const DelayConstants& constants) {
  if (distance_km < 0 || std::isnan(distance_km))
    throw DomainError("negative distance " + std::to_string(distance_km) + " km");
  const double velocity = medium == Medium::kFiber
                              ? constants.fiber_velocity_factor * constants.light_speed_km_s
                              : constants.light_speed_km_s;
  return distance_km / velocity;
}

double queue_delay(const QueueState& q) {
  if (!(q.mu_pkts_per_s > 0)) throw DomainError("service rate must be positive");
  if (q.lambda_pkts_per_s < 0 || std::isnan(q.lambda_pkts_per_s))
    throw DomainError("arrival rate must be non-negative");
  if (q.lambda_pkts_per_s >= q.mu_pkts_per_s)
    throw InstabilityError(q.device, q.lambda_pkts_per_s, q.mu_pkts_per_s);
  return 1.0 / (q.mu_pkts_per_s - q.lambda_pkts_per_s);
}

double path_propagation_delay(const Architecture& arch, const ProcessingUnit& unit) {
  double total = 0.0;
  for (const auto& hop : unit.access_path)
    total += propagation_delay(hop.link.distance_km, hop.link.medium, arch.delay);
  return total;
}

DelayBreakdown task_delays(const Architecture& arch, const TaskSet& tasks,
                           const Allocation& alloc, const ModelOptions& options) {
  return task_delays(arch, tasks, alloc, aggregate_loads(arch, tasks, alloc, options.averaging),
                     options);
}

DelayBreakdown task_delays(const Architecture& arch, const TaskSet& tasks,
                           const Allocation& alloc, const DeviceLoads& loads,
                           const ModelOptions& options) {
  DelayBreakdown out;
  out.per_task_prop_s.resize(tasks.size());
  out.per_task_queue_s.resize(tasks.size());
  double weight_sum = 0.0;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto& unit = arch.units[alloc.unit_of_task[t]];
    double queue = 0.0;
    for (const auto& hop : unit.access_path) {
      const auto& dev = arch.devices[hop.device];
      if (!dev.is_queue()) continue;
      const std::size_t src = queue_load_source(arch, hop.device, options.ap_queue);
      queue += queue_delay({arch.service_rate_pps(hop.device),
                            loads.load[src] / arch.packet_size_bits, dev.name});
    }
    out.per_task_prop_s[t] = path_propagation_delay(arch, unit);
    out.per_task_queue_s[t] = queue;

    const double w = averaging_weight(tasks[t], options.averaging);
    weight_sum += w;
    out.avg_prop_s += w * out.per_task_prop_s[t];
    out.avg_queue_s += w * queue;
  }
  if (weight_sum > 0) {
    out.avg_prop_s /= weight_sum;
    out.avg_queue_s /= weight_sum;
  }
  return out;
}

void write_delay_csv(std::ostream& os, const Architecture& arch, const TaskSet& tasks,
                     const Allocation& alloc, const DelayBreakdown& delays) {
  os << "task_id,node,prop_s,queue_s\n";
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    os << tasks[t].id << ',' << arch.units[alloc.unit_of_task[t]].id << ','
       << format_double(delays.per_task_prop_s[t]) << ','
       << format_double(delays.per_task_queue_s[t]) << '\n';
  }
}

}  // namespace vecalloc

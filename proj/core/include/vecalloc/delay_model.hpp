#ifndef VECALLOC_DELAY_MODEL_HPP
#define VECALLOC_DELAY_MODEL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "vecalloc/model.hpp"

namespace vecalloc {

/// Fibre: D / (velocity_factor * c). Wireless: D / c.
double propagation_delay(double distance_km, Medium medium, const DelayConstants& constants = {});

struct QueueState {
  double mu_pkts_per_s = 0.0;
  double lambda_pkts_per_s = 0.0;
  std::string device;  // for diagnostics
};

/// M/M/1 sojourn time 1 / (mu - lambda). Throws InstabilityError when
/// lambda >= mu and DomainError on non-positive mu or negative lambda.
double queue_delay(const QueueState& q);

/// Sum of link delays from the task sources to the unit.
double path_propagation_delay(const Architecture& arch, const ProcessingUnit& unit);

struct DelayBreakdown {
  std::vector<double> per_task_prop_s;
  std::vector<double> per_task_queue_s;
  double avg_prop_s = 0.0;   // R
  double avg_queue_s = 0.0;  // Q, seconds per packet
};

/// Per-task propagation and queueing delay plus their averages. Queueing sums
/// 1/(mu_d - lambda_d) over the queued devices on the task's path, with
/// lambda_d aggregated over every task that crosses d.
DelayBreakdown task_delays(const Architecture& arch, const TaskSet& tasks,
                           const Allocation& alloc, const ModelOptions& options = {});

/// Same, reusing loads aggregated with the same averaging option.
DelayBreakdown task_delays(const Architecture& arch, const TaskSet& tasks,
                           const Allocation& alloc, const DeviceLoads& loads,
                           const ModelOptions& options);

/// CSV rows: task_id,node,prop_s,queue_s.
void write_delay_csv(std::ostream& os, const Architecture& arch, const TaskSet& tasks,
                     const Allocation& alloc, const DelayBreakdown& delays);

}  // namespace vecalloc

#endif  // VECALLOC_DELAY_MODEL_HPP

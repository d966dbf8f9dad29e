#ifndef VECALLOC_POWER_MODEL_HPP
#define VECALLOC_POWER_MODEL_HPP

#include <iosfwd>
#include <vector>

#include "vecalloc/model.hpp"

namespace vecalloc {

/// Idle-proportional draw: 0 W when unloaded, otherwise
/// idle + (max - idle) * load / capacity.
double device_power(const DeviceProfile& profile, double load);

struct DevicePower {
  std::size_t device = 0;
  double load = 0.0;
  double watts = 0.0;
};

struct PowerBreakdown {
  double processing_w = 0.0;
  double network_w = 0.0;
  double total_w = 0.0;
  std::vector<DevicePower> per_device;  // active powered devices only
};

/// Power of already-aggregated loads. Idle power is paid once per active
/// device however many tasks share it.
PowerBreakdown power_from_loads(const Architecture& arch, const DeviceLoads& loads);

PowerBreakdown total_power(const Architecture& arch, const TaskSet& tasks,
                           const Allocation& alloc);

/// CSV rows: device,load,watts (load in MIPS or Mb/s).
void write_power_csv(std::ostream& os, const Architecture& arch, const PowerBreakdown& power);

}  // namespace vecalloc

#endif  // VECALLOC_POWER_MODEL_HPP

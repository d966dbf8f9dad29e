#include "vecalloc/power_model.hpp"

#include <cmath>
#include <ostream>

#include "vecalloc/csv.hpp"
#include "vecalloc/errors.hpp"

namespace vecalloc {

double device_power(const DeviceProfile& profile, double load) {
  if (load < 0 || std::isnan(load))
    throw DomainError("negative load on '" + profile.name + "'");
  if (load > profile.capacity * (1.0 + kCapacityTolerance))
    throw CapacityError(profile.name, load, profile.capacity);
  if (load == 0.0) return 0.0;
  return profile.idle_power_w +
         (profile.max_power_w - profile.idle_power_w) * (load / profile.capacity);
}

PowerBreakdown power_from_loads(const Architecture& arch, const DeviceLoads& loads) {
  PowerBreakdown out;
  for (std::size_t d = 0; d < arch.devices.size(); ++d) {
    const auto& dev = arch.devices[d];
    if (!dev.draws_power() || loads.tasks[d] == 0) continue;
    const double w = device_power(dev, loads.load[d]);
    (dev.is_processor() ? out.processing_w : out.network_w) += w;
    out.per_device.push_back({d, loads.load[d], w});
  }
  out.total_w = out.processing_w + out.network_w;
  return out;
}

PowerBreakdown total_power(const Architecture& arch, const TaskSet& tasks,
                           const Allocation& alloc) {
  return power_from_loads(arch, aggregate_loads(arch, tasks, alloc));
}

void write_power_csv(std::ostream& os, const Architecture& arch, const PowerBreakdown& power) {
  os << "device,load,watts\n";
  for (const auto& p : power.per_device) {
    const auto& dev = arch.devices[p.device];
    const double load = dev.is_processor() ? p.load : p.load / 1e6;
    os << dev.name << ',' << format_double(load) << ',' << format_double(p.watts) << '\n';
  }
}

}  // namespace vecalloc

#include <cmath>

#include "vecalloc/allocator.hpp"
#include "vecalloc/delay_model.hpp"
#include "vecalloc/errors.hpp"
#include "vecalloc/power_model.hpp"

namespace vecalloc {

Weights Weights::scaled(double k) const {
  Weights out = *this;
  out.alpha *= k;
  out.beta *= k;
  out.gamma *= k;
  return out;
}

void validate_weights(const Weights& w) {
  for (double v : {w.alpha, w.beta, w.gamma})
    if (!(v >= 0) || !std::isfinite(v)) throw DomainError("weights must be finite and >= 0");
  if (w.alpha == 0 && w.beta == 0 && w.gamma == 0)
    throw DomainError("weights must not all be zero");
}

ObjectiveBreakdown evaluate(const Architecture& arch, const TaskSet& tasks,
                            const Allocation& alloc, const Weights& w,
                            const ModelOptions& options) {
  validate_weights(w);
  const DeviceLoads loads = aggregate_loads(arch, tasks, alloc, options.averaging);
  if (auto issue = find_violation(arch, loads, options.ap_queue))
    throw InfeasibleError(issue->describe());

  const PowerBreakdown power = power_from_loads(arch, loads);
  const DelayBreakdown delay = task_delays(arch, tasks, alloc, loads, options);

  ObjectiveBreakdown out;
  out.power_w = power.total_w;
  out.prop_s = delay.avg_prop_s;
  out.queue_s = delay.avg_queue_s;
  out.scalar = w.alpha * out.power_w + w.beta * out.prop_s + w.gamma * out.queue_s;
  return out;
}

}  // namespace vecalloc

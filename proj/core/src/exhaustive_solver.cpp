#include <cmath>

#include "vecalloc/allocator.hpp"
#include "vecalloc/errors.hpp"

namespace vecalloc {

SolveReport solve_exhaustive(const Architecture& arch, const TaskSet& tasks, const Weights& w,
                             const ModelOptions& options) {
  validate_weights(w);
  const std::size_t n = tasks.size();
  const std::size_t units = arch.units.size();

  const double space = std::pow(static_cast<double>(units), static_cast<double>(n));
  if (space > kExhaustiveLimit)
    throw SizeGuardError("exhaustive search over " + std::to_string(units) + "^" +
                         std::to_string(n) + " assignments exceeds the 1e8 limit");

  SolveReport report;
  if (n > 0 && units == 0) return report;

  Allocation current{std::vector<std::size_t>(n, 0)};
  for (;;) {
    ++report.nodes_explored;
    const DeviceLoads loads = aggregate_loads(arch, tasks, current, options.averaging);
    if (!find_violation(arch, loads, options.ap_queue)) {
      const ObjectiveBreakdown obj = evaluate(arch, tasks, current, w, options);
      if (report.proof == Proof::kInfeasible || obj.scalar < report.objective.scalar) {
        report.proof = Proof::kOptimal;
        report.best = current;
        report.objective = obj;
      }
    }
    // Odometer with task 0 as the most significant digit.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++current.unit_of_task[pos] < units) break;
      current.unit_of_task[pos] = 0;
      if (pos == 0) return report;
    }
    if (n == 0) return report;
  }
}

}  // namespace vecalloc

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "vecalloc/allocator.hpp"
#include "vecalloc/delay_model.hpp"
#include "vecalloc/errors.hpp"
#include "vecalloc/power_model.hpp"

namespace vecalloc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Demand a unit places on one device per unit of task demand.
struct Touch {
  std::size_t device;
  bool processor;  // MIPS rather than bit/s
};

struct QueueRef {
  std::size_t device;
  std::size_t source;  // device whose load is the arrival rate
  double mu_bps;
};

struct UnitInfo {
  std::vector<Touch> touches;             // processor, hops and meters, deduplicated
  std::vector<std::size_t> path_queues;   // indices into Search::queues_
  double prop_s = 0.0;
  std::size_t symmetry_class = 0;
};

// Two units are interchangeable when they have identical processors and hop
// profiles and share every device that is not private to them.
std::vector<std::size_t> symmetry_classes(const Architecture& arch) {
  std::vector<std::size_t> users(arch.devices.size(), 0);
  for (const auto& u : arch.units) {
    ++users[u.processor];
    for (const auto& h : u.access_path) ++users[h.device];
  }
  auto same_profile = [&](std::size_t a, std::size_t b) {
    const auto& x = arch.devices[a];
    const auto& y = arch.devices[b];
    return x.kind == y.kind && x.capacity == y.capacity && x.max_power_w == y.max_power_w &&
           x.idle_power_w == y.idle_power_w && x.service_rate_bps == y.service_rate_bps &&
           x.power_meter == y.power_meter;
  };
  auto same_slot = [&](std::size_t a, std::size_t b) {
    if (a == b) return true;
    return users[a] == 1 && users[b] == 1 && same_profile(a, b);
  };
  auto interchangeable = [&](const ProcessingUnit& a, const ProcessingUnit& b) {
    if (a.layer != b.layer || a.access_path.size() != b.access_path.size()) return false;
    if (a.processor == b.processor || !same_slot(a.processor, b.processor)) return false;
    for (std::size_t i = 0; i < a.access_path.size(); ++i) {
      if (a.access_path[i].link != b.access_path[i].link) return false;
      if (!same_slot(a.access_path[i].device, b.access_path[i].device)) return false;
    }
    return true;
  };

  std::vector<std::size_t> cls(arch.units.size());
  for (std::size_t i = 0; i < arch.units.size(); ++i) {
    cls[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (cls[j] == j && interchangeable(arch.units[i], arch.units[j])) {
        cls[i] = j;
        break;
      }
    }
  }
  return cls;
}

class Search {
 public:
  Search(const Architecture& arch, const TaskSet& tasks, const Weights& w,
         const ModelOptions& options)
      : arch_(arch),
        tasks_(tasks),
        w_(w),
        options_(options),
        loads_(arch.devices.size()),
        assignment_(tasks.size(), 0) {
    for (std::size_t d = 0; d < arch.devices.size(); ++d) {
      const auto& dev = arch.devices[d];
      if (dev.is_queue())
        queues_.push_back({d, queue_load_source(arch, d, options.ap_queue), dev.service_rate_bps});
    }

    const auto cls = symmetry_classes(arch);
    units_.resize(arch.units.size());
    for (std::size_t u = 0; u < arch.units.size(); ++u) {
      const auto& unit = arch.units[u];
      auto& info = units_[u];
      auto add = [&](std::size_t d, bool cpu) {
        for (const auto& t : info.touches)
          if (t.device == d) return;
        info.touches.push_back({d, cpu});
      };
      add(unit.processor, true);
      for (const auto& hop : unit.access_path) {
        add(hop.device, false);
        if (const auto& m = arch.devices[hop.device].power_meter) add(*m, false);
        for (std::size_t q = 0; q < queues_.size(); ++q)
          if (queues_[q].device == hop.device) info.path_queues.push_back(q);
      }
      info.prop_s = path_propagation_delay(arch, unit);
      info.symmetry_class = cls[u];
    }

    weight_total_ = 0.0;
    for (const auto& t : tasks.tasks()) weight_total_ += averaging_weight(t, options.averaging);

    order_.resize(tasks.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return tasks[a].traffic_mbps > tasks[b].traffic_mbps;
    });
    class_open_.assign(arch.units.size(), 0);
  }

  SolveReport run() {
    if (tasks_.empty()) {
      report_.proof = Proof::kOptimal;
      report_.objective = evaluate(arch_, tasks_, Allocation{}, w_, options_);
      report_.nodes_explored = 1;
      return report_;
    }
    dive(0);
    return report_;
  }

 private:
  double queue_value(const QueueRef& q, double load_bps) const {
    return arch_.packet_size_bits / (q.mu_bps - load_bps);
  }

  // Lower bound on the objective increase caused by placing task t on unit u
  // given the current loads, or +inf when u cannot host t. `remaining` is the
  // number of unassigned tasks, t included; newly activated devices are
  // charged idle / remaining so that the sum over tasks never exceeds one
  // activation.
  double marginal(std::size_t t, std::size_t u, std::size_t remaining) const {
    const Task& task = tasks_[t];
    const UnitInfo& info = units_[u];
    const double bps = task.traffic_mbps * 1e6;

    double power = 0.0;
    for (const auto& touch : info.touches) {
      const auto& dev = arch_.devices[touch.device];
      const double add = touch.processor ? task.mips : bps;
      const double next = loads_.load[touch.device] + add;
      if (next > dev.capacity * (1.0 + kCapacityTolerance)) return kInf;
      if (!dev.draws_power()) continue;
      power += (dev.max_power_w - dev.idle_power_w) * (add / dev.capacity);
      if (loads_.tasks[touch.device] == 0) power += dev.idle_power_w / static_cast<double>(remaining);
    }

    double queue = 0.0;
    const double wt = averaging_weight(task, options_.averaging);
    for (std::size_t qi = 0; qi < queues_.size(); ++qi) {
      const QueueRef& q = queues_[qi];
      if (!touches(info, q.source)) continue;
      const bool on_path =
          std::find(info.path_queues.begin(), info.path_queues.end(), qi) != info.path_queues.end();
      const double before = loads_.load[q.source];
      const double after = before + bps;
      if ((on_path || loads_.tasks[q.device] > 0) && !(after < q.mu_bps)) return kInf;
      if (loads_.tasks[q.device] > 0)
        queue += loads_.task_weight[q.device] * (queue_value(q, after) - queue_value(q, before));
      if (on_path) queue += wt * queue_value(q, after);
    }

    return w_.alpha * power +
           (w_.beta * wt * info.prop_s + w_.gamma * queue) / weight_total_;
  }

  static bool touches(const UnitInfo& info, std::size_t device) {
    for (const auto& t : info.touches)
      if (t.device == device) return true;
    return false;
  }

  // Exact objective of the tasks assigned so far.
  double partial_objective(std::size_t depth) const {
    double prop = 0.0;
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t t = order_[k];
      prop += averaging_weight(tasks_[t], options_.averaging) * units_[assignment_[t]].prop_s;
    }
    double power = 0.0;
    for (std::size_t d = 0; d < arch_.devices.size(); ++d) {
      const auto& dev = arch_.devices[d];
      if (!dev.draws_power() || loads_.tasks[d] == 0) continue;
      power += dev.idle_power_w + (dev.max_power_w - dev.idle_power_w) *
                                      (loads_.load[d] / dev.capacity);
    }
    double queue = 0.0;
    for (const auto& q : queues_)
      if (loads_.tasks[q.device] > 0)
        queue += loads_.task_weight[q.device] * queue_value(q, loads_.load[q.source]);
    return w_.alpha * power + (w_.beta * prop + w_.gamma * queue) / weight_total_;
  }

  double bound(std::size_t depth) const {
    double lb = partial_objective(depth);
    const std::size_t remaining = order_.size() - depth;
    for (std::size_t k = depth; k < order_.size(); ++k) {
      double best = kInf;
      for (std::size_t u = 0; u < units_.size(); ++u)
        best = std::min(best, marginal(order_[k], u, remaining));
      if (best == kInf) return kInf;
      lb += best;
    }
    return lb;
  }

  bool may_open(std::size_t u) const {
    // Within a class of interchangeable units, only the lowest-indexed empty
    // unit may receive a task.
    const std::size_t cls = units_[u].symmetry_class;
    if (class_open_[u] > 0) return true;
    for (std::size_t v = 0; v < u; ++v)
      if (units_[v].symmetry_class == cls && class_open_[v] == 0) return false;
    return true;
  }

  void place(std::size_t t, std::size_t u, int sign) {
    apply_task(arch_, arch_.units[u], tasks_[t], options_.averaging, loads_, sign);
    if (sign > 0) {
      ++class_open_[u];
    } else {
      --class_open_[u];
    }
  }

  void dive(std::size_t depth) {
    ++report_.nodes_explored;
    if (depth == order_.size()) {
      Allocation alloc{assignment_};
      try {
        const ObjectiveBreakdown obj = evaluate(arch_, tasks_, alloc, w_, options_);
        if (report_.proof == Proof::kInfeasible || obj.scalar < report_.objective.scalar) {
          report_.proof = Proof::kOptimal;
          report_.best = std::move(alloc);
          report_.objective = obj;
        }
      } catch (const InfeasibleError&) {
      }
      return;
    }

    const std::size_t t = order_[depth];
    const std::size_t remaining = order_.size() - depth;
    std::vector<std::pair<double, std::size_t>> children;
    for (std::size_t u = 0; u < units_.size(); ++u) {
      if (!may_open(u)) continue;
      const double m = marginal(t, u, remaining);
      if (m < kInf) children.emplace_back(m, u);
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [m, u] : children) {
      assignment_[t] = u;
      place(t, u, +1);
      const double lb = bound(depth + 1);
      if (report_.proof == Proof::kInfeasible ? lb < kInf : lb < report_.objective.scalar)
        dive(depth + 1);
      place(t, u, -1);
    }
  }

  const Architecture& arch_;
  const TaskSet& tasks_;
  const Weights& w_;
  const ModelOptions& options_;

  std::vector<QueueRef> queues_;
  std::vector<UnitInfo> units_;
  std::vector<std::size_t> order_;
  double weight_total_ = 0.0;

  DeviceLoads loads_;
  std::vector<std::size_t> assignment_;
  std::vector<std::size_t> class_open_;  // tasks currently on each unit

  SolveReport report_;
};

}  // namespace

SolveReport solve_bnb(const Architecture& arch, const TaskSet& tasks, const Weights& w,
                      const ModelOptions& options) {
  validate_weights(w);
  if (!tasks.empty() && arch.units.empty()) return SolveReport{};
  return Search(arch, tasks, w, options).run();
}

}  // namespace vecalloc

#include "vecalloc/lp_export.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "vecalloc/csv.hpp"
#include "vecalloc/delay_model.hpp"

namespace vecalloc {
namespace {

std::string x_var(std::size_t t, std::size_t u) {
  return "x_t" + std::to_string(t) + "_u" + std::to_string(u);
}
std::string y_var(std::size_t d) { return "y_d" + std::to_string(d); }
std::string l_var(std::size_t d) { return "L_d" + std::to_string(d); }
std::string z_var(std::size_t t, std::size_t d) {
  return "z_t" + std::to_string(t) + "_d" + std::to_string(d);
}

// Writes " + c name" / " - c name" and skips zero coefficients.
class Expr {
 public:
  explicit Expr(std::ostream& os) : os_(os) {}

  void term(double c, const std::string& name) {
    if (c == 0.0) return;
    os_ << (c < 0 ? " - " : (empty_ ? " " : " + ")) << format_double(std::abs(c)) << ' ' << name;
    empty_ = false;
    if (++count_ % 6 == 0) os_ << "\n   ";
  }
  bool empty() const { return empty_; }

 private:
  std::ostream& os_;
  bool empty_ = true;
  int count_ = 0;
};

bool uses(const ProcessingUnit& unit, const Architecture& arch, std::size_t d) {
  if (unit.processor == d) return true;
  for (const auto& h : unit.access_path)
    if (h.device == d || arch.devices[h.device].power_meter == d) return true;
  return false;
}

bool on_path(const ProcessingUnit& unit, std::size_t d) {
  return std::any_of(unit.access_path.begin(), unit.access_path.end(),
                     [&](const Hop& h) { return h.device == d; });
}

}  // namespace

void write_lp(std::ostream& os, const Architecture& arch, const TaskSet& tasks, const Weights& w,
              const ModelOptions& model, const LpExportOptions& options) {
  validate_weights(w);
  const std::size_t T = tasks.size();
  const std::size_t U = arch.units.size();
  const std::size_t D = arch.devices.size();

  std::vector<double> tw(T);
  double total_w = 0.0;
  for (std::size_t t = 0; t < T; ++t) total_w += tw[t] = averaging_weight(tasks[t], model.averaging);
  if (total_w == 0.0) total_w = 1.0;

  std::vector<double> prop(U);
  for (std::size_t u = 0; u < U; ++u) prop[u] = path_propagation_delay(arch, arch.units[u]);

  // Devices that can carry load at all.
  std::vector<bool> reachable(D, false);
  for (std::size_t d = 0; d < D; ++d)
    for (const auto& unit : arch.units) reachable[d] = reachable[d] || uses(unit, arch, d);

  os << "\\ assignment model, alpha=" << format_double(w.alpha) << " beta=" << format_double(w.beta)
     << " gamma=" << format_double(w.gamma) << "\n";
  for (std::size_t t = 0; t < T; ++t)
    os << "\\ t" << t << " = " << tasks[t].id << " (" << format_double(tasks[t].mips) << " MIPS, "
       << format_double(tasks[t].traffic_mbps) << " Mb/s)\n";
  for (std::size_t u = 0; u < U; ++u) os << "\\ u" << u << " = " << arch.units[u].id << "\n";
  for (std::size_t d = 0; d < D; ++d) os << "\\ d" << d << " = " << arch.devices[d].name << "\n";

  os << "Minimize\n obj:";
  Expr obj(os);
  std::vector<std::size_t> powered;
  for (std::size_t d = 0; d < D; ++d) {
    const auto& dev = arch.devices[d];
    if (!reachable[d] || !dev.draws_power()) continue;
    powered.push_back(d);
    obj.term(w.alpha * dev.idle_power_w, y_var(d));
    obj.term(w.alpha * (dev.max_power_w - dev.idle_power_w) / dev.capacity, l_var(d));
  }
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t u = 0; u < U; ++u) obj.term(w.beta * tw[t] * prop[u] / total_w, x_var(t, u));

  struct QueueRows {
    std::size_t device;
    std::size_t source;
    double mu;
    std::vector<TangentSegment> tangents;
    double big_m;
  };
  std::vector<QueueRows> queues;
  for (std::size_t d = 0; d < D; ++d) {
    const auto& dev = arch.devices[d];
    if (!dev.is_queue() || !reachable[d]) continue;
    QueueRows q;
    q.device = d;
    q.source = queue_load_source(arch, d, model.ap_queue);
    q.mu = arch.service_rate_pps(d);
    q.tangents = linearize_queue(q.mu, uniform_breakpoints(q.mu, options.breakpoints,
                                                           options.max_utilization));
    q.big_m = 0.0;
    for (const auto& s : q.tangents) q.big_m = std::max(q.big_m, s(q.mu));
    queues.push_back(std::move(q));
  }
  for (const auto& q : queues)
    for (std::size_t t = 0; t < T; ++t) obj.term(w.gamma * tw[t] / total_w, z_var(t, q.device));
  if (obj.empty()) os << " 0 " << x_var(0, 0);
  os << "\nSubject To\n";

  for (std::size_t t = 0; t < T; ++t) {
    os << " assign_t" << t << ":";
    Expr e(os);
    for (std::size_t u = 0; u < U; ++u) e.term(1.0, x_var(t, u));
    os << " = 1\n";
  }

  for (std::size_t d = 0; d < D; ++d) {
    if (!reachable[d]) continue;
    os << " load_d" << d << ":";
    Expr e(os);
    e.term(1.0, l_var(d));
    const bool processor = arch.devices[d].is_processor();
    for (std::size_t t = 0; t < T; ++t)
      for (std::size_t u = 0; u < U; ++u)
        if (uses(arch.units[u], arch, d))
          e.term(-(processor ? tasks[t].mips : tasks[t].traffic_mbps * 1e6), x_var(t, u));
    os << " = 0\n";
  }

  for (std::size_t d = 0; d < D; ++d) {
    if (!reachable[d]) continue;
    const auto& dev = arch.devices[d];
    if (dev.draws_power()) {
      os << " act_d" << d << ": " << l_var(d) << " - " << format_double(dev.capacity) << ' '
         << y_var(d) << " <= 0\n";
    } else {
      os << " cap_d" << d << ": " << l_var(d) << " <= " << format_double(dev.capacity) << "\n";
    }
  }

  for (const auto& q : queues) {
    os << " stab_d" << q.device << ": " << l_var(q.source)
       << " <= " << format_double(arch.devices[q.device].service_rate_bps) << "\n";
    const double to_pps = 1.0 / arch.packet_size_bits;
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t k = 0; k < q.tangents.size(); ++k) {
        const auto& s = q.tangents[k];
        os << " q_t" << t << "_d" << q.device << "_k" << k << ":";
        Expr e(os);
        e.term(1.0, z_var(t, q.device));
        e.term(-s.slope * to_pps, l_var(q.source));
        for (std::size_t u = 0; u < U; ++u)
          if (on_path(arch.units[u], q.device)) e.term(-q.big_m, x_var(t, u));
        os << " >= " << format_double(s.intercept - q.big_m) << "\n";
      }
    }
  }

  os << "Bounds\n";
  for (const auto& q : queues)
    for (std::size_t t = 0; t < T; ++t) os << " " << z_var(t, q.device) << " >= 0\n";
  os << "Binaries\n";
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t u = 0; u < U; ++u) os << " " << x_var(t, u) << "\n";
  for (std::size_t d : powered) os << " " << y_var(d) << "\n";
  os << "End\n";
}

}  // namespace vecalloc

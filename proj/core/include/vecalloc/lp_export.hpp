#ifndef VECALLOC_LP_EXPORT_HPP
#define VECALLOC_LP_EXPORT_HPP

#include <cstddef>
#include <iosfwd>

#include "vecalloc/allocator.hpp"

namespace vecalloc {

struct LpExportOptions {
  std::size_t breakpoints = 8;      // tangents per queue
  double max_utilization = 0.95;    // last breakpoint, as a fraction of mu
};

/// Writes a piecewise-linearised assignment model in CPLEX LP format.
///
/// Variables (t = task index, u = unit index, d = device index):
///   x_t<t>_u<u>  binary, task t runs on unit u
///   y_d<d>       binary, powered device d is active
///   L_d<d>       continuous load of device d (MIPS or bit/s)
///   z_t<t>_d<d>  continuous queueing delay of task t at queued device d
///
/// Rows:
///   assign_t<t>   sum_u x = 1
///   load_d<d>     L - sum demand * x = 0
///   act_d<d>      L - capacity * y <= 0      (powered devices)
///   cap_d<d>      L <= capacity               (unpowered devices)
///   stab_d<d>     arrival bit/s <= service rate (the strict inequality is
///                 relaxed to <=)
///   q_t<t>_d<d>_k<k>  z - b_k * lambda_pps - M * sum x >= a_k - M, one per
///                 tangent a_k + b_k * lambda; M is the largest tangent value
///                 on [0, mu], so the row is slack when t avoids d.
///
/// Objective: alpha * sum_d (idle_d * y_d + slope_d * L_d)
///   + beta / W * sum_{t,u} w_t * prop_u * x_t_u + gamma / W * sum_{t,d} w_t * z_t_d
/// where w_t is the averaging weight and W their total. Queue delay enters in
/// seconds. A comment block lists the index to name mapping.
void write_lp(std::ostream& os, const Architecture& arch, const TaskSet& tasks,
              const Weights& w, const ModelOptions& model = {},
              const LpExportOptions& options = {});

}  // namespace vecalloc

#endif  // VECALLOC_LP_EXPORT_HPP

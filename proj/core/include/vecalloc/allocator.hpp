#ifndef VECALLOC_ALLOCATOR_HPP
#define VECALLOC_ALLOCATOR_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vecalloc/model.hpp"

namespace vecalloc {

enum class WeightProvenance { kManual, kCalibrated };

/// Scalarization factors of alpha*P + beta*R + gamma*Q. alpha is unitless;
/// beta and gamma are Watts per second of delay.
struct Weights {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  WeightProvenance provenance = WeightProvenance::kManual;
  std::string scenario;  // set when calibrated

  Weights scaled(double k) const;
};

/// Throws DomainError on negative, non-finite or all-zero weights.
void validate_weights(const Weights& w);

struct ObjectiveBreakdown {
  double power_w = 0.0;  // P
  double prop_s = 0.0;   // R, average propagation delay
  double queue_s = 0.0;  // Q, average queueing delay per packet
  double scalar = 0.0;
};

/// P, R and Q of a total, feasible allocation and their weighted sum.
/// Throws InfeasibleError naming the violated constraint otherwise.
ObjectiveBreakdown evaluate(const Architecture& arch, const TaskSet& tasks,
                            const Allocation& alloc, const Weights& w,
                            const ModelOptions& options = {});

enum class Proof { kOptimal, kInfeasible };

struct SolveReport {
  Allocation best;
  ObjectiveBreakdown objective;
  std::uint64_t nodes_explored = 0;
  Proof proof = Proof::kInfeasible;
};

inline constexpr double kExhaustiveLimit = 1e8;

/// Enumerates every assignment in lexicographic (task, unit) order and keeps
/// the first one with the smallest scalar. Throws SizeGuardError when
/// units^tasks exceeds kExhaustiveLimit.
SolveReport solve_exhaustive(const Architecture& arch, const TaskSet& tasks, const Weights& w,
                             const ModelOptions& options = {});

/// Depth-first branch-and-bound with admissible per-task marginal bounds.
/// Interchangeable units (the VNs) are only opened in index order.
SolveReport solve_bnb(const Architecture& arch, const TaskSet& tasks, const Weights& w,
                      const ModelOptions& options = {});

/// Tangent line of 1/(mu - lambda) at `at`.
struct TangentSegment {
  double at = 0.0;
  double intercept = 0.0;
  double slope = 0.0;

  double operator()(double lambda) const { return intercept + slope * lambda; }
};

/// Tangents of the M/M/1 sojourn time at each breakpoint (packets/s). The
/// upper envelope underestimates 1/(mu - lambda) on [0, mu) and touches it at
/// the breakpoints. Throws DomainError unless breakpoints are strictly
/// increasing in [0, mu).
std::vector<TangentSegment> linearize_queue(double mu, std::span<const double> breakpoints);

/// max over segments at lambda.
double envelope(std::span<const TangentSegment> segments, double lambda);

/// `count` breakpoints evenly spaced in utilisation over [0, max_utilization].
std::vector<double> uniform_breakpoints(double mu, std::size_t count,
                                        double max_utilization = 0.95);

}  // namespace vecalloc

#endif  // VECALLOC_ALLOCATOR_HPP

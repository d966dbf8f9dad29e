#include <algorithm>
#include <cmath>
#include <limits>

#include "vecalloc/allocator.hpp"
#include "vecalloc/errors.hpp"

namespace vecalloc {

std::vector<TangentSegment> linearize_queue(double mu, std::span<const double> breakpoints) {
  if (!(mu > 0)) throw DomainError("service rate must be positive");
  std::vector<TangentSegment> out;
  out.reserve(breakpoints.size());
  double prev = -std::numeric_limits<double>::infinity();
  for (double at : breakpoints) {
    if (at < 0 || at >= mu) throw DomainError("breakpoint outside [0, mu)");
    if (!(at > prev)) throw DomainError("breakpoints must be strictly increasing");
    prev = at;
    const double value = 1.0 / (mu - at);
    const double slope = value * value;
    out.push_back({at, value - slope * at, slope});
  }
  return out;
}

double envelope(std::span<const TangentSegment> segments, double lambda) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : segments) best = std::max(best, s(lambda));
  return best;
}

std::vector<double> uniform_breakpoints(double mu, std::size_t count, double max_utilization) {
  std::vector<double> out;
  if (count == 0) return out;
  if (count == 1) return {0.0};
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(mu * max_utilization * static_cast<double>(i) / static_cast<double>(count - 1));
  return out;
}

}  // namespace vecalloc

#ifndef VECALLOC_QUEUE_SIM_HPP
#define VECALLOC_QUEUE_SIM_HPP

#include <cstdint>

namespace vecalloc {

struct SimConfig {
  double mu = 0.0;      // service rate, packets/s
  double lambda = 0.0;  // arrival rate, packets/s
  std::uint64_t warmup = 20'000;
  std::uint64_t measured = 200'000;
  std::uint64_t seed = 1;
};

struct SimResult {
  double mean_sojourn_s = 0.0;
  double variance = 0.0;          // sample variance of individual sojourn times
  double ci95_halfwidth_s = 0.0;  // batch-means confidence half width
  std::uint64_t packets_measured = 0;
};

/// Event-driven single-server FIFO queue with Poisson arrivals and
/// exponential service. Arrivals and services draw from separately seeded
/// streams so a run is reproducible from `seed` alone. lambda = 0 sends
/// isolated packets, so each sojourn is one service time. Throws DomainError
/// when lambda >= mu or mu <= 0.
SimResult simulate_mm1(const SimConfig& config);

}  // namespace vecalloc

#endif  // VECALLOC_QUEUE_SIM_HPP

#include "vecalloc/queue_sim.hpp"

#include <cmath>
#include <deque>
#include <functional>
#include <queue>
#include <random>
#include <vector>

#include "vecalloc/errors.hpp"

namespace vecalloc {
namespace {

constexpr int kBatches = 20;
constexpr double kStudentT19 = 2.093;  // two-sided 95%, 19 degrees of freedom

enum class EventKind { kArrival, kDeparture };

struct Event {
  double time;
  std::uint64_t seq;  // ties resolve in scheduling order
  EventKind kind;

  bool operator>(const Event& o) const { return time != o.time ? time > o.time : seq > o.seq; }
};

}  // namespace

SimResult simulate_mm1(const SimConfig& config) {
  if (!(config.mu > 0) || !std::isfinite(config.mu)) throw DomainError("mu must be positive");
  if (!(config.lambda >= 0) || config.lambda >= config.mu)
    throw DomainError("lambda must lie in [0, mu)");
  if (config.measured < kBatches) throw DomainError("need at least 20 measured packets");

  std::mt19937_64 arrival_rng(config.seed);
  std::mt19937_64 service_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::exponential_distribution<double> service(config.mu);

  const std::uint64_t total = config.warmup + config.measured;
  std::vector<double> sojourn;
  sojourn.reserve(config.measured);

  if (config.lambda == 0.0) {
    for (std::uint64_t i = 0; i < total; ++i) {
      const double s = service(service_rng);
      if (i >= config.warmup) sojourn.push_back(s);
    }
  } else {
    std::exponential_distribution<double> interarrival(config.lambda);
    std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
    std::deque<double> waiting;  // arrival times, FIFO, head is in service
    std::uint64_t seq = 0;
    std::uint64_t arrived = 0;
    std::uint64_t departed = 0;

    events.push({interarrival(arrival_rng), seq++, EventKind::kArrival});
    while (departed < total) {
      const Event e = events.top();
      events.pop();
      if (e.kind == EventKind::kArrival) {
        waiting.push_back(e.time);
        if (waiting.size() == 1)
          events.push({e.time + service(service_rng), seq++, EventKind::kDeparture});
        if (++arrived < total)
          events.push({e.time + interarrival(arrival_rng), seq++, EventKind::kArrival});
      } else {
        const double arrived_at = waiting.front();
        waiting.pop_front();
        if (departed++ >= config.warmup) sojourn.push_back(e.time - arrived_at);
        if (!waiting.empty())
          events.push({e.time + service(service_rng), seq++, EventKind::kDeparture});
      }
    }
  }

  SimResult r;
  r.packets_measured = sojourn.size();
  double sum = 0.0;
  for (double s : sojourn) sum += s;
  const double n = static_cast<double>(sojourn.size());
  r.mean_sojourn_s = sum / n;
  double ss = 0.0;
  for (double s : sojourn) ss += (s - r.mean_sojourn_s) * (s - r.mean_sojourn_s);
  r.variance = ss / (n - 1.0);

  const std::size_t per_batch = sojourn.size() / kBatches;
  std::vector<double> means(kBatches, 0.0);
  for (int b = 0; b < kBatches; ++b) {
    for (std::size_t k = 0; k < per_batch; ++k) means[b] += sojourn[b * per_batch + k];
    means[b] /= static_cast<double>(per_batch);
  }
  double grand = 0.0;
  for (double m : means) grand += m;
  grand /= kBatches;
  double bvar = 0.0;
  for (double m : means) bvar += (m - grand) * (m - grand);
  bvar /= kBatches - 1;
  r.ci95_halfwidth_s = kStudentT19 * std::sqrt(bvar / kBatches);
  return r;
}

}  // namespace vecalloc

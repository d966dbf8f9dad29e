// Acceptance suite. Prints one PASS/FAIL line per criterion. With a numeric
// argument only that criterion runs; the exit status is non-zero if any
// selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "vecalloc/allocator.hpp"
#include "vecalloc/delay_model.hpp"
#include "vecalloc/power_model.hpp"
#include "vecalloc/queue_sim.hpp"
#include "vecalloc/scenarios.hpp"

namespace {

using namespace vecalloc;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Tolerances and limits, fixed here.
constexpr int kOracleInstances = 500;
constexpr double kOracleRelTol = 1e-9;
constexpr double kOracleSeconds = 60.0;
constexpr double kSimMu = 10e9 / 12000;  // 833,333.33 packets/s
constexpr std::uint64_t kSimPackets = 200'000;
constexpr double kSimRelTol = 0.05;
constexpr double kSimSeconds = 30.0;
constexpr double kQueueBandLow = 13e-6;
constexpr double kQueueBandHigh = 17.5e-6;
constexpr double kQueueDropMin = 0.80;
constexpr double kAdapterMbps = 72.2;
constexpr double kLinearityRelTol = 1e-12;
constexpr double kCalibrationRelTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0 ? 0.0 : std::abs(a - b) / scale;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Weights make_weights(double a, double b, double g) {
  Weights w;
  w.alpha = a;
  w.beta = b;
  w.gamma = g;
  return w;
}

const std::vector<SweepResult>& default_sweep() {
  static const std::vector<SweepResult> results = [] {
    SweepOptions o;
    o.jobs = 4;
    return run_sweeps(default_architecture(), kAllScenarios, default_traffic_points(), o);
  }();
  return results;
}

const SweepResult& sweep_of(ScenarioId id) {
  for (const auto& r : default_sweep())
    if (r.scenario == id) return r;
  throw std::logic_error("scenario missing");
}

Outcome oracle_equivalence() {
  const Architecture full = default_architecture();
  const std::size_t pool[] = {*full.find_unit("VN[0]"), *full.find_unit("VN[1]"),
                              *full.find_unit("NF"), *full.find_unit("LF")};
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> n_tasks(1, 5);
  std::uniform_int_distribution<int> mask(1, 15);
  std::uniform_real_distribution<double> traffic(0.5, 70.0);
  std::uniform_real_distribution<double> mips_per_mbps(1.0, 40.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const auto start = Clock::now();
  int compared = 0, optimal = 0, mismatches = 0;
  double worst = 0.0;
  while (compared < kOracleInstances) {
    std::vector<std::size_t> keep;
    const int m = mask(rng);
    for (int b = 0; b < 4; ++b)
      if (m & (1 << b)) keep.push_back(pool[b]);
    const Architecture arch = full.restricted_to(keep);

    std::vector<Task> tasks;
    const int n = n_tasks(rng);
    for (int t = 0; t < n; ++t) {
      const double mbps = traffic(rng);
      tasks.push_back({"t" + std::to_string(t + 1), mbps * mips_per_mbps(rng), mbps});
    }
    const TaskSet ts(tasks);

    // Each weight is zero a quarter of the time; magnitudes span the
    // calibrated range of the default architecture.
    auto draw = [&](double scale) { return unit(rng) < 0.25 ? 0.0 : unit(rng) * scale; };
    Weights w = make_weights(draw(1.0), draw(2e7), draw(5e6));
    if (w.alpha == 0 && w.beta == 0 && w.gamma == 0) w.alpha = 1.0;

    const SolveReport a = solve_exhaustive(arch, ts, w);
    const SolveReport b = solve_bnb(arch, ts, w);
    ++compared;
    if (a.proof != b.proof) {
      ++mismatches;
      continue;
    }
    if (a.proof != Proof::kOptimal) continue;
    ++optimal;
    const double r = rel(a.objective.scalar, b.objective.scalar);
    worst = std::max(worst, r);
    if (r > kOracleRelTol) ++mismatches;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  Outcome o;
  o.pass = mismatches == 0 && secs < kOracleSeconds && optimal > kOracleInstances / 2;
  o.detail = std::to_string(compared) + " instances (" + std::to_string(optimal) +
             " feasible), " + std::to_string(mismatches) + " mismatches, worst rel " +
             fmt("%.2e", worst) + ", " + fmt("%.2f", secs) + " s";
  return o;
}

Outcome mm1_validation() {
  const auto start = Clock::now();
  Outcome o;
  std::string parts;
  for (double rho : {0.1, 0.3, 0.5, 0.8}) {
    SimConfig cfg;
    cfg.mu = kSimMu;
    cfg.lambda = rho * kSimMu;
    cfg.measured = kSimPackets;
    cfg.seed = 12345;
    const double analytic = 1.0 / (cfg.mu - cfg.lambda);
    const double err = rel(simulate_mm1(cfg).mean_sojourn_s, analytic);
    if (err > kSimRelTol) o.pass = false;
    parts += (parts.empty() ? "" : ", ") + fmt("rho %.1f", rho) + fmt(" err %.4f", err);
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= kSimSeconds) o.pass = false;
  o.detail = parts + ", " + fmt("%.2f s", secs);
  return o;
}

Outcome queue_anchors() {
  const auto& pts = sweep_of(ScenarioId::kPowerProp).points;
  Outcome o;
  std::string band;
  for (const auto& p : pts) {
    if (p.traffic_mbps > 300) continue;
    const bool in = p.feasible && p.objective.queue_s >= kQueueBandLow &&
                    p.objective.queue_s <= kQueueBandHigh;
    o.pass = o.pass && in;
    band += (band.empty() ? "" : " ") + fmt("%.0f:", p.traffic_mbps) +
            fmt("%.2fus", p.objective.queue_s * 1e6);
  }
  // The shift: last VN-dominated point followed by the first NF-dominated one.
  const std::size_t vn = 0, nf = 1;
  std::size_t shift = pts.size();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto& prev = pts[i - 1].layers;
    const auto& cur = pts[i].layers;
    if (prev[vn] > prev[nf] && cur[nf] > cur[vn]) {
      shift = i;
      break;
    }
  }
  if (shift == pts.size()) {
    o.pass = false;
    o.detail = "band [" + band + "]; no VN to NF shift found";
    return o;
  }
  const double before = pts[shift - 1].objective.queue_s;
  const double after = pts[shift].objective.queue_s;
  const double drop = 1.0 - after / before;
  o.pass = o.pass && drop >= kQueueDropMin;
  o.detail = "band [" + band + "]; shift " + fmt("%.0f", pts[shift - 1].traffic_mbps) + "->" +
             fmt("%.0f Mb/s: ", pts[shift].traffic_mbps) + fmt("%.2fus", before * 1e6) + " -> " +
             fmt("%.2fus", after * 1e6) + fmt(", drop %.1f%%", drop * 100) +
             fmt(" (need >= %.0f%%)", kQueueDropMin * 100);
  return o;
}

Outcome allocation_narrative() {
  const Architecture arch = default_architecture();
  Outcome o;
  std::vector<std::string> notes;

  bool a = true;
  for (const auto& p : sweep_of(ScenarioId::kPowerProp).points)
    if (p.traffic_mbps <= 300) a = a && p.feasible && p.layers[0] == p.tasks.size();
  notes.push_back(std::string("(a) ") + (a ? "ok" : "FAIL"));

  bool b = true;
  for (const auto& r : default_sweep())
    for (const auto& p : r.points)
      for (std::size_t t = 0; p.feasible && t < p.tasks.size(); ++t)
        if (p.tasks[t].traffic_mbps > kAdapterMbps &&
            arch.units[p.allocation.unit_of_task[t]].layer == Layer::kVN)
          b = false;
  notes.push_back(std::string("(b) ") + (b ? "ok" : "FAIL"));

  bool c = true;
  std::string c_where;
  for (const auto& r : default_sweep()) {
    if (!includes_queue(r.scenario)) continue;
    for (const auto& p : r.points)
      if (p.layers[0] > 0) {
        c = false;
        c_where += " " + std::string(to_string(r.scenario)) + "@" + fmt("%.0f", p.traffic_mbps) +
                   "=" + std::to_string(p.layers[0]);
      }
  }
  notes.push_back(std::string("(c) ") + (c ? "ok" : "FAIL, VN tasks at" + c_where));

  bool d = false;
  for (const auto& p : sweep_of(ScenarioId::kPowerProp).points)
    if (p.traffic_mbps == 800) d = p.feasible && p.layers[static_cast<int>(Layer::kLF)] > 0;
  notes.push_back(std::string("(d) ") + (d ? "ok" : "FAIL"));

  o.pass = a && b && c && d;
  for (const auto& n : notes) o.detail += (o.detail.empty() ? "" : "; ") + n;
  return o;
}

// Enumerates every feasible assignment of a small instance.
std::vector<std::pair<Allocation, ObjectiveBreakdown>> enumerate_feasible(
    const Architecture& arch, const TaskSet& ts, const Weights& w) {
  std::vector<std::pair<Allocation, ObjectiveBreakdown>> out;
  const std::size_t n = ts.size(), u = arch.units.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= u;
  for (std::size_t code = 0; code < total; ++code) {
    Allocation a;
    for (std::size_t i = 0, c = code; i < n; ++i, c /= u) a.unit_of_task.push_back(c % u);
    if (find_violation(arch, aggregate_loads(arch, ts, a))) continue;
    out.emplace_back(a, evaluate(arch, ts, a, w));
  }
  return out;
}

Outcome physical_properties() {
  Outcome o;
  std::vector<std::string> notes;

  // Power is non-decreasing in traffic for each scenario.
  std::string mono;
  for (const auto& r : default_sweep()) {
    for (std::size_t i = 1; i < r.points.size(); ++i) {
      const auto& p0 = r.points[i - 1];
      const auto& p1 = r.points[i];
      if (p0.feasible && p1.feasible && p1.objective.power_w < p0.objective.power_w)
        mono += " " + std::string(to_string(r.scenario)) + " " + fmt("%.0f", p0.traffic_mbps) +
                "->" + fmt("%.0f", p1.traffic_mbps) + fmt(" (%.2f", p0.objective.power_w) +
                fmt("->%.2f W)", p1.objective.power_w);
    }
  }
  notes.push_back(mono.empty() ? "power monotone ok" : "power monotone FAIL:" + mono);

  // Adding a task raises power by the idle power of exactly the devices it
  // activates plus the proportional increments.
  const Architecture arch = default_architecture();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, arch.units.size() - 1);
  std::uniform_real_distribution<double> mbps(1.0, 30.0);
  int steps = 0, bad_steps = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Task> tasks;
    Allocation alloc;
    for (int t = 0; t < 3; ++t) {
      const double m = mbps(rng);
      tasks.push_back({"t" + std::to_string(t), 10 * m, m});
      alloc.unit_of_task.push_back(pick(rng));
    }
    const double extra = mbps(rng);
    std::vector<Task> more = tasks;
    more.push_back({"x", 10 * extra, extra});
    Allocation alloc2 = alloc;
    alloc2.unit_of_task.push_back(pick(rng));
    const TaskSet ts(tasks), ts2(more);
    const auto l1 = aggregate_loads(arch, ts, alloc);
    const auto l2 = aggregate_loads(arch, ts2, alloc2);
    if (find_violation(arch, l2)) continue;
    double expected = 0.0;
    bool activates = false;
    for (std::size_t d = 0; d < arch.devices.size(); ++d) {
      const auto& dev = arch.devices[d];
      if (!dev.draws_power() || l2.tasks[d] == 0) continue;
      const double slope = (dev.max_power_w - dev.idle_power_w) / dev.capacity;
      if (l1.tasks[d] == 0) {
        expected += dev.idle_power_w + slope * l2.load[d];
        activates = true;
      } else {
        expected += slope * (l2.load[d] - l1.load[d]);
      }
    }
    const double delta = power_from_loads(arch, l2).total_w - power_from_loads(arch, l1).total_w;
    steps += activates;
    if (std::abs(delta - expected) > 1e-9 * std::max(1.0, std::abs(expected))) ++bad_steps;
  }
  notes.push_back(bad_steps == 0 && steps > 0
                      ? "activation steps ok (" + std::to_string(steps) + " activating additions)"
                      : "activation steps FAIL (" + std::to_string(bad_steps) + " wrong)");

  // Doubling a distance doubles its propagation delay.
  double worst_lin = 0.0;
  for (double d : {0.01, 0.05, 0.5, 10.0, 50.0, 100.0, 1234.5})
    for (Medium m : {Medium::kFiber, Medium::kWireless})
      worst_lin = std::max(worst_lin,
                           rel(propagation_delay(2 * d, m), 2 * propagation_delay(d, m)));
  notes.push_back(std::string(worst_lin <= kLinearityRelTol ? "linearity ok" : "linearity FAIL") +
                  fmt(" (worst %.1e)", worst_lin));

  // Scaling all weights keeps the set of optimal assignments.
  const std::size_t keep[] = {*arch.find_unit("VN[0]"), *arch.find_unit("VN[1]"),
                              *arch.find_unit("NF"), *arch.find_unit("LF")};
  const Architecture small = arch.restricted_to(keep);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int instances = 0, changed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Task> tasks;
    for (int t = 0; t < 4; ++t) {
      const double m = 1 + 60 * unit(rng);
      tasks.push_back({"t" + std::to_string(t), m * (1 + 30 * unit(rng)), m});
    }
    const TaskSet ts(tasks);
    const Weights w = make_weights(unit(rng), 2e7 * unit(rng), 5e6 * unit(rng));
    auto optima = [&](const Weights& ww) {
      const auto all = enumerate_feasible(small, ts, ww);
      double best = INFINITY;
      for (const auto& [a, obj] : all) best = std::min(best, obj.scalar);
      std::vector<Allocation> set;
      for (const auto& [a, obj] : all)
        if (obj.scalar <= best * (1 + 1e-12)) set.push_back(a);
      return set;
    };
    const auto base = optima(w);
    if (base.empty()) continue;
    ++instances;
    for (double k : {1e-3, 0.5, 7.0, 1e4})
      if (optima(w.scaled(k)) != base) {
        ++changed;
        break;
      }
  }
  notes.push_back(changed == 0 ? "argmin invariance ok (" + std::to_string(instances) + " instances)"
                               : "argmin invariance FAIL (" + std::to_string(changed) + ")");

  o.pass = mono.empty() && bad_steps == 0 && steps > 0 && worst_lin <= kLinearityRelTol &&
           changed == 0;
  for (const auto& n : notes) o.detail += (o.detail.empty() ? "" : "; ") + n;
  return o;
}

Outcome calibration_contract() {
  const Architecture arch = default_architecture();
  double worst = 0.0;
  int points = 0;
  for (double t : default_traffic_points()) {
    const auto ref = calibration_reference(arch, scaled_taskset(t));
    const Weights w = calibrated_weights(ScenarioId::kPowerPropQueue, ref);
    const double p = w.alpha * ref.optimum.power_w;
    worst = std::max({worst, rel(p, w.beta * ref.optimum.prop_s),
                      rel(p, w.gamma * ref.optimum.queue_s)});
    ++points;
  }
  Outcome o;
  o.pass = worst <= kCalibrationRelTol;
  o.detail = std::to_string(points) + " points, worst rel " + fmt("%.1e", worst);
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "vecalloc_acceptance_determinism";
  fs::remove_all(root);
  const std::vector<std::vector<std::string>> commands = {
      {"sweep", "--seed", "7"},
      {"sweep", "--seed", "7", "--calibration", "global", "--jobs", "3"},
      {"solve", "--scenario", "power-prop-queue", "--traffic", "550", "--seed", "7"},
      {"validate-queue", "--seed", "7", "--packets", "50000"},
      {"export-lp", "--units", "4", "--tasks", "3", "--traffic", "60", "--out"},
      {"tasks", "--traffic", "100:1000:100", "--out"},
  };
  int files = 0, differ = 0, failed = 0;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::vector<fs::path> dirs;
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = root / (std::to_string(c) + "_" + std::to_string(run));
      std::vector<std::string> args = {"vecalloc"};
      args.insert(args.end(), commands[c].begin(), commands[c].end());
      if (args.back() != "--out") args.push_back("--out");
      args.push_back(dir.string());
      std::ostringstream out, err;
      if (cli::run(args, out, err) != 0) ++failed;
      dirs.push_back(dir);
    }
    for (const auto& e : fs::directory_iterator(dirs[0])) {
      ++files;
      if (slurp(e.path()) != slurp(dirs[1] / e.path().filename())) ++differ;
    }
  }
  fs::remove_all(root);
  Outcome o;
  o.pass = failed == 0 && differ == 0 && files > 0;
  o.detail = std::to_string(commands.size()) + " commands, " + std::to_string(files) +
             " files compared, " + std::to_string(differ) + " differ, " + std::to_string(failed) +
             " runs failed";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"oracle equivalence (B&B vs exhaustive)", oracle_equivalence},
      {"M/M/1 simulation vs 1/(mu-lambda)", mm1_validation},
      {"queue anchors (13-17.5 us band, >= 80% drop at VN->NF shift)", queue_anchors},
      {"allocation narrative", allocation_narrative},
      {"power monotonicity, activation steps, distance linearity, argmin invariance",
       physical_properties},
      {"calibration contract alpha P0 = beta R0 = gamma Q0", calibration_contract},
      {"CLI determinism", determinism},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0], criteria.size());
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::printf("%s criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}

#include "commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "vecalloc/allocator.hpp"
#include "vecalloc/config.hpp"
#include "vecalloc/csv.hpp"
#include "vecalloc/delay_model.hpp"
#include "vecalloc/errors.hpp"
#include "vecalloc/lp_export.hpp"
#include "vecalloc/power_model.hpp"
#include "vecalloc/queue_sim.hpp"
#include "vecalloc/scenarios.hpp"

namespace vecalloc::cli {
namespace fs = std::filesystem;

namespace {

struct Manifest {
  std::string command;
  std::string arch_path;  // empty: built-in default
  std::string scenario;
  std::string traffic;
  std::string solver = "bnb";
  std::string calibration = "per-point";
  std::string workload = "scaled";
  std::string averaging = "task-mean";
  std::string ap_queue = "per-interface";
  std::string out = ".";
  std::uint64_t seed = 1;
  bool gnuplot = false;
  std::size_t tasks = 0;  // 0: the reference ten-task shape
  std::size_t units = 0;  // 0: every unit
  std::string tasks_file;
  unsigned jobs = 1;
  std::optional<double> alpha, beta, gamma;
};

// Everything a solve or sweep needs, resolved from a Manifest.
struct Run {
  Architecture arch;
  std::string arch_hash;
  std::vector<ScenarioId> scenarios;
  std::vector<double> traffic;
  SweepOptions options;
};

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + format_double(xs[i]);
  return s;
}

Architecture resolve_architecture(const Manifest& m, std::ostream& err) {
  Architecture arch = m.arch_path.empty() ? default_architecture() : load_architecture(m.arch_path);
  const auto issues = validate(arch);
  if (!issues.empty()) {
    for (const auto& v : issues) err << "invalid architecture: " << v.subject << ": " << v.message << "\n";
    throw ConfigError(issues.front().subject, issues.front().message);
  }
  if (m.units > 0) {
    if (m.units > arch.units.size())
      throw ConfigError("--units", "architecture has only " + std::to_string(arch.units.size()) +
                                       " processing units");
    std::vector<std::size_t> keep(m.units);
    for (std::size_t i = 0; i < m.units; ++i) keep[i] = i;
    arch = arch.restricted_to(keep);
  }
  return arch;
}

std::vector<ScenarioId> resolve_scenarios(const std::string& text) {
  if (text == "all") return {kAllScenarios.begin(), kAllScenarios.end()};
  auto id = parse_scenario(text);
  if (!id) throw ConfigError("--scenario", "unknown scenario '" + text + "'");
  return {*id};
}

ModelOptions resolve_model(const Manifest& m) {
  ModelOptions o;
  if (m.averaging == "traffic-weighted") o.averaging = DelayAveraging::kTrafficWeighted;
  else if (m.averaging != "task-mean") throw ConfigError("--averaging", "unknown mode '" + m.averaging + "'");
  if (m.ap_queue == "per-device") o.ap_queue = QueueAggregation::kPerDevice;
  else if (m.ap_queue != "per-interface") throw ConfigError("--ap-queue", "unknown mode '" + m.ap_queue + "'");
  return o;
}

Run resolve(const Manifest& m, const std::string& default_traffic, std::ostream& err) {
  Run r;
  r.arch = resolve_architecture(m, err);
  r.arch_hash = architecture_hash(r.arch);
  r.scenarios = resolve_scenarios(m.scenario);
  r.traffic = parse_traffic(m.traffic.empty() ? default_traffic : m.traffic);

  SweepOptions& o = r.options;
  o.solver = m.solver == "exhaustive" ? Solver::kExhaustive : Solver::kBnb;
  if (m.solver != "bnb" && m.solver != "exhaustive")
    throw ConfigError("--solver", "expected 'bnb' or 'exhaustive'");
  auto cal = parse_calibration(m.calibration);
  if (!cal) throw ConfigError("--calibration", "expected 'per-point' or 'global'");
  o.calibration = *cal;
  if (m.workload == "fixed") o.workload = SweepMode::kFixedSizes;
  else if (m.workload != "scaled") throw ConfigError("--workload", "expected 'scaled' or 'fixed'");
  if (m.tasks > 0) o.task_count = m.tasks;
  o.model = resolve_model(m);
  o.jobs = m.jobs;
  if (m.alpha || m.beta || m.gamma) {
    Weights w;
    w.alpha = m.alpha.value_or(0.0);
    w.beta = m.beta.value_or(0.0);
    w.gamma = m.gamma.value_or(0.0);
    validate_weights(w);
    o.manual_weights = w;
  }
  return r;
}

std::vector<std::string> manifest_lines(const Manifest& m, const Run& r) {
  std::vector<std::string> lines;
  lines.push_back("vecalloc " + m.command);
  lines.push_back("arch: " + (m.arch_path.empty() ? std::string("default") : m.arch_path) +
                  " hash=" + r.arch_hash + " units=" + std::to_string(r.arch.units.size()));
  std::string ids;
  for (auto id : r.scenarios) ids += (ids.empty() ? "" : ",") + std::string(to_string(id));
  lines.push_back("scenarios: " + ids);
  lines.push_back("traffic_mbps: " + join(r.traffic));
  if (!m.tasks_file.empty()) lines.push_back("tasks: file " + m.tasks_file);
  else if (m.tasks > 0) lines.push_back("tasks: " + std::to_string(m.tasks) + " cyclic");
  else lines.push_back("tasks: " + m.workload);
  lines.push_back("solver: " + m.solver);
  lines.push_back("model: averaging=" + m.averaging + " ap_queue=" + m.ap_queue);
  if (r.options.manual_weights) {
    const auto& w = *r.options.manual_weights;
    lines.push_back("weights: manual alpha=" + format_double(w.alpha) + " beta=" +
                    format_double(w.beta) + " gamma=" + format_double(w.gamma));
  } else {
    lines.push_back("weights: calibrated " + m.calibration + " (per-row values in objectives.csv)");
  }
  lines.push_back("seed: " + std::to_string(m.seed));
  return lines;
}

void write_table(const fs::path& dir, const std::string& base, Table table,
                 const std::vector<std::string>& header, bool gnuplot) {
  for (const auto& line : header) table.add_comment(line);
  {
    std::ofstream f(dir / (base + ".csv"), std::ios::binary);
    if (!f) throw ConfigError((dir / (base + ".csv")).string(), "cannot write file");
    table.write_csv(f);
  }
  if (gnuplot) {
    std::ofstream f(dir / (base + ".dat"), std::ios::binary);
    table.write_gnuplot(f);
  }
}

std::string value_or_nan(bool feasible, double v) {
  return feasible ? format_double(v) : "nan";
}

void write_results(const fs::path& dir, const Architecture& arch,
                   const std::vector<SweepResult>& results, const std::vector<std::string>& header,
                   bool gnuplot) {
  Table fig2({"traffic", "scenario", "total_w"});
  Table fig3({"traffic", "scenario", "avg_prop_s"});
  Table fig4({"traffic", "scenario", "avg_queue_s"});
  Table fig5({"traffic", "scenario", "layer", "task_count"});
  Table objectives({"traffic", "scenario", "feasible", "alpha", "beta", "gamma", "power_w",
                    "prop_s", "queue_s", "scalar", "note"});
  Table allocations({"traffic", "scenario", "task_id", "mips", "traffic_mbps", "unit"});

  for (const auto& res : results) {
    const std::string sc(to_string(res.scenario));
    for (const auto& p : res.points) {
      const std::string t = format_double(p.traffic_mbps);
      const auto& o = p.objective;
      fig2.add_row({t, sc, value_or_nan(p.feasible, o.power_w)});
      fig3.add_row({t, sc, value_or_nan(p.feasible, o.prop_s)});
      fig4.add_row({t, sc, value_or_nan(p.feasible, o.queue_s)});
      // All VNs collapse into the VEC column.
      for (int l = 0; l < kLayerCount; ++l) {
        fig5.add_row({t, sc, std::string(layer_column(static_cast<Layer>(l))),
                      p.feasible ? std::to_string(p.layers[l]) : "nan"});
      }
      objectives.add_row({t, sc, p.feasible ? "1" : "0", format_double(p.weights.alpha),
                          format_double(p.weights.beta), format_double(p.weights.gamma),
                          value_or_nan(p.feasible, o.power_w), value_or_nan(p.feasible, o.prop_s),
                          value_or_nan(p.feasible, o.queue_s), value_or_nan(p.feasible, o.scalar),
                          p.note});
      if (!p.feasible) continue;
      for (std::size_t i = 0; i < p.tasks.size(); ++i) {
        const Task& task = p.tasks[i];
        allocations.add_row({t, sc, task.id, format_double(task.mips),
                             format_double(task.traffic_mbps),
                             arch.units[p.allocation.unit_of_task[i]].id});
      }
    }
  }
  write_table(dir, "fig2", std::move(fig2), header, gnuplot);
  write_table(dir, "fig3", std::move(fig3), header, gnuplot);
  write_table(dir, "fig4", std::move(fig4), header, gnuplot);
  write_table(dir, "fig5", std::move(fig5), header, gnuplot);
  write_table(dir, "objectives", std::move(objectives), header, gnuplot);
  write_table(dir, "allocations", std::move(allocations), header, gnuplot);
}

fs::path prepare_out_dir(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError(out, "cannot create output directory: " + ec.message());
  return dir;
}

// Explains why a task set has no feasible allocation, as far as a single
// task can: the first task that fits on no unit on its own.
std::string infeasibility_reason(const Architecture& arch, const TaskSet& tasks,
                                 const ModelOptions& model) {
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    std::optional<FeasibilityIssue> first;
    bool fits = false;
    for (const auto& unit : arch.units) {
      DeviceLoads loads(arch.devices.size());
      apply_task(arch, unit, tasks[t], model.averaging, loads);
      auto issue = find_violation(arch, loads, model.ap_queue);
      if (!issue) {
        fits = true;
        break;
      }
      if (!first) first = issue;
    }
    if (!fits && first) return "task '" + tasks[t].id + "' fits on no unit: " + first->describe();
  }
  return "capacity constraints cannot be met jointly";
}

TaskSet generated_taskset(double traffic, const SweepOptions& o) {
  if (o.task_count) return cyclic_taskset(*o.task_count, traffic);
  return o.workload == SweepMode::kScaled ? scaled_taskset(traffic) : fixed_size_taskset(traffic);
}

TaskSet solve_taskset(const Manifest& m, double traffic, const SweepOptions& o) {
  if (!m.tasks_file.empty()) return load_taskset(m.tasks_file);
  return generated_taskset(traffic, o);
}

Weights solve_weights(const Run& r, const TaskSet& tasks, ScenarioId id) {
  const auto& o = r.options;
  if (o.manual_weights) return *o.manual_weights;
  const TaskSet reference = o.calibration == CalibrationMode::kGlobal
                                ? generated_taskset(kGlobalCalibrationMbps, o)
                                : tasks;
  return calibrate(r.arch, reference, id, o.solver, o.model);
}

int cmd_solve(const Manifest& m, std::ostream& out, std::ostream& err) {
  Run r = resolve(m, "550", err);
  if (r.scenarios.size() != 1) throw ConfigError("--scenario", "solve takes a single scenario");
  if (m.tasks_file.empty() && r.traffic.size() != 1)
    throw ConfigError("--traffic", "solve takes a single traffic point");
  const ScenarioId id = r.scenarios.front();
  const TaskSet tasks = solve_taskset(m, r.traffic.front(), r.options);
  if (!m.tasks_file.empty()) r.traffic = {tasks.total_traffic_mbps()};

  SweepPoint p;
  p.traffic_mbps = r.traffic.front();
  p.tasks = tasks;
  try {
    p.weights = solve_weights(r, tasks, id);
  } catch (const InfeasibleError&) {
    err << "infeasible: " << infeasibility_reason(r.arch, tasks, r.options.model) << "\n";
    return kInfeasible;
  }
  const SolveReport report = solve(r.arch, tasks, p.weights, r.options.solver, r.options.model);
  if (report.proof == Proof::kInfeasible) {
    err << "infeasible: " << infeasibility_reason(r.arch, tasks, r.options.model) << "\n";
    return kInfeasible;
  }
  p.feasible = true;
  p.objective = report.objective;
  p.allocation = report.best;
  p.layers = layer_counts(r.arch, report.best);

  const fs::path dir = prepare_out_dir(m.out);
  const auto header = manifest_lines(m, r);
  write_results(dir, r.arch, {SweepResult{id, {p}}}, header, m.gnuplot);

  const DeviceLoads loads = aggregate_loads(r.arch, tasks, p.allocation, r.options.model.averaging);
  const PowerBreakdown power = power_from_loads(r.arch, loads);
  const DelayBreakdown delays = task_delays(r.arch, tasks, p.allocation, loads, r.options.model);
  {
    std::ofstream f(dir / "power.csv", std::ios::binary);
    write_power_csv(f, r.arch, power);
  }
  {
    std::ofstream f(dir / "delay.csv", std::ios::binary);
    write_delay_csv(f, r.arch, tasks, p.allocation, delays);
  }

  std::ostringstream summary;
  for (const auto& line : header) summary << "# " << line << "\n";
  summary << "scenario        " << to_string(id) << "\n"
          << "weights         alpha=" << format_double(p.weights.alpha)
          << " beta=" << format_double(p.weights.beta)
          << " gamma=" << format_double(p.weights.gamma) << "\n"
          << "power_w         " << format_double(p.objective.power_w) << " (processing "
          << format_double(power.processing_w) << ", network " << format_double(power.network_w)
          << ")\n"
          << "avg_prop_s      " << format_double(p.objective.prop_s) << "\n"
          << "avg_queue_s     " << format_double(p.objective.queue_s) << "\n"
          << "scalar          " << format_double(p.objective.scalar) << "\n"
          << "nodes_explored  " << report.nodes_explored << "\n"
          << "tasks per layer";
  for (int l = 0; l < kLayerCount; ++l)
    summary << " " << layer_column(static_cast<Layer>(l)) << "=" << p.layers[l];
  summary << "\n";
  {
    std::ofstream f(dir / "summary.txt", std::ios::binary);
    f << summary.str();
  }
  out << summary.str();
  return kOk;
}

int cmd_sweep(const Manifest& m, std::ostream& out, std::ostream& err) {
  if (!m.tasks_file.empty()) throw ConfigError("--tasks-file", "not supported by sweep");
  Run r = resolve(m, "100:1000:100", err);
  std::vector<SweepResult> results;
  try {
    results = run_sweeps(r.arch, r.scenarios, r.traffic, r.options);
  } catch (const InfeasibleError& e) {
    // Only the global calibration point can fail as a whole.
    err << "infeasible calibration reference: " << e.what() << "\n";
    return kInfeasible;
  }
  const fs::path dir = prepare_out_dir(m.out);
  write_results(dir, r.arch, results, manifest_lines(m, r), m.gnuplot);

  std::size_t infeasible = 0;
  for (const auto& res : results)
    for (const auto& p : res.points) infeasible += !p.feasible;
  out << "wrote fig2-fig5, objectives and allocations to " << dir.string() << " ("
      << r.scenarios.size() << " scenarios x " << r.traffic.size() << " points";
  if (infeasible) out << ", " << infeasible << " infeasible";
  out << ")\n";
  return kOk;
}

struct QueueOptions {
  std::string rho = "0.1,0.3,0.5,0.8";
  double mu = 10e9 / kDefaultPacketBits;
  std::uint64_t packets = 200'000;
  std::uint64_t warmup = 20'000;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_validate_queue(const QueueOptions& q, std::ostream& out) {
  const auto grid = parse_list(q.rho);
  for (double rho : grid)
    if (!(rho >= 0 && rho < 1)) throw ConfigError("--rho", "utilisation must lie in [0, 1)");
  Table table({"rho", "analytic_s", "simulated_s", "rel_err", "ci95_halfwidth_s"});
  table.add_comment("vecalloc validate-queue");
  table.add_comment("mu_pkts_per_s: " + format_double(q.mu) + " packets: " +
                    std::to_string(q.packets) + " warmup: " + std::to_string(q.warmup));
  table.add_comment("seed: " + std::to_string(q.seed));
  for (double rho : grid) {
    SimConfig cfg;
    cfg.mu = q.mu;
    cfg.lambda = rho * q.mu;
    cfg.measured = q.packets;
    cfg.warmup = q.warmup;
    cfg.seed = q.seed;
    const SimResult sim = simulate_mm1(cfg);
    const double analytic = queue_delay({cfg.mu, cfg.lambda, "sim"});
    table.add_row({format_double(rho), format_double(analytic), format_double(sim.mean_sojourn_s),
                   format_double(std::abs(sim.mean_sojourn_s - analytic) / analytic),
                   format_double(sim.ci95_halfwidth_s)});
  }
  table.write_csv(out);
  if (!q.out.empty()) {
    const fs::path dir = prepare_out_dir(q.out);
    std::ofstream f(dir / "queue_validation.csv", std::ios::binary);
    table.write_csv(f);
  }
  return kOk;
}

int cmd_export_lp(const Manifest& m, std::size_t breakpoints, std::ostream& out,
                  std::ostream& err) {
  Run r = resolve(m, "550", err);
  if (r.scenarios.size() != 1) throw ConfigError("--scenario", "export-lp takes a single scenario");
  const TaskSet tasks = solve_taskset(m, r.traffic.front(), r.options);
  Weights w;
  try {
    w = solve_weights(r, tasks, r.scenarios.front());
  } catch (const InfeasibleError&) {
    err << "infeasible: " << infeasibility_reason(r.arch, tasks, r.options.model) << "\n";
    return kInfeasible;
  }
  LpExportOptions lp;
  lp.breakpoints = breakpoints;
  if (m.out == "-") {
    write_lp(out, r.arch, tasks, w, r.options.model, lp);
  } else {
    const fs::path dir = prepare_out_dir(m.out);
    std::ofstream f(dir / "model.lp", std::ios::binary);
    write_lp(f, r.arch, tasks, w, r.options.model, lp);
    out << "wrote " << (dir / "model.lp").string() << "\n";
  }
  return kOk;
}

int cmd_tasks(const Manifest& m, std::ostream& out, std::ostream& err) {
  Manifest copy = m;
  copy.scenario = "all";
  Run r = resolve(copy, "100:1000:100", err);
  Table table({"traffic", "task_id", "mips", "traffic_mbps"});
  for (double t : r.traffic) {
    const TaskSet ts = solve_taskset(m, t, r.options);
    for (const auto& task : ts.tasks())
      table.add_row({format_double(t), task.id, format_double(task.mips),
                     format_double(task.traffic_mbps)});
  }
  if (m.out == "-") {
    table.write_csv(out);
  } else {
    write_table(prepare_out_dir(m.out), "tasks", std::move(table), {"vecalloc tasks"}, m.gnuplot);
  }
  return kOk;
}

void add_model_options(CLI::App* cmd, Manifest& m, bool multi_scenario) {
  cmd->add_option("--arch", m.arch_path, "Architecture JSON file (default: built-in)");
  cmd->add_option("--scenario", m.scenario,
                  multi_scenario ? "power-prop | power-queue | power-prop-queue | all"
                                 : "power-prop | power-queue | power-prop-queue");
  cmd->add_option("--traffic", m.traffic, "Total traffic in Mb/s: list a,b,c or range start:end:step");
  cmd->add_option("--solver", m.solver, "bnb | exhaustive");
  cmd->add_option("--calibration", m.calibration, "per-point | global");
  cmd->add_option("--workload", m.workload, "scaled | fixed");
  cmd->add_option("--averaging", m.averaging, "task-mean | traffic-weighted");
  cmd->add_option("--ap-queue", m.ap_queue, "per-interface | per-device");
  cmd->add_option("--tasks", m.tasks, "Number of tasks (cycling the reference shapes)");
  cmd->add_option("--units", m.units, "Keep only the first N processing units");
  cmd->add_option("--alpha", m.alpha, "Manual power weight (disables calibration)");
  cmd->add_option("--beta", m.beta, "Manual propagation weight, W/s");
  cmd->add_option("--gamma", m.gamma, "Manual queueing weight, W/s");
  cmd->add_option("--seed", m.seed, "Seed recorded in the manifest");
  cmd->add_flag("--gnuplot", m.gnuplot, "Also write whitespace-delimited .dat files");
}

}  // namespace

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> xs;
  if (text.empty()) return xs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma - start);
    try {
      xs.push_back(parse_double(item));
    } catch (const std::exception&) {
      throw ConfigError("list", "not a number: '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return xs;
}

std::vector<double> parse_traffic(std::string_view text) {
  std::vector<double> xs;
  if (text.find(':') != std::string_view::npos) {
    std::string spec(text);
    for (char& c : spec)
      if (c == ':') c = ',';
    const auto parts = parse_list(spec);
    if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0])
      throw ConfigError("--traffic", "range must be start:end:step with step > 0");
    const auto n = static_cast<std::size_t>((parts[1] - parts[0]) / parts[2] + 1e-9);
    for (std::size_t i = 0; i <= n; ++i) xs.push_back(parts[0] + static_cast<double>(i) * parts[2]);
  } else {
    xs = parse_list(text);
  }
  if (xs.empty()) throw ConfigError("--traffic", "no traffic points");
  for (double x : xs)
    if (!(x > 0)) throw ConfigError("--traffic", "traffic points must be positive");
  return xs;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy- and delay-aware task allocation over a vehicular edge / fog / cloud "
               "architecture"};
  app.name(args.empty() ? "vecalloc" : args.front());
  bool dump_arch = false;
  app.add_flag("--dump-default-arch", dump_arch, "Print the built-in architecture as JSON");
  app.require_subcommand(0, 1);

  Manifest solve_m;
  solve_m.scenario = "power-prop";
  auto* solve_cmd = app.add_subcommand("solve", "Solve one traffic point and write solution files");
  add_model_options(solve_cmd, solve_m, false);
  solve_cmd->add_option("--tasks-file", solve_m.tasks_file, "Task set JSON file");
  solve_cmd->add_option("--out", solve_m.out, "Output directory");

  Manifest sweep_m;
  sweep_m.scenario = "all";
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep total traffic and write fig2-fig5 CSVs");
  add_model_options(sweep_cmd, sweep_m, true);
  sweep_cmd->add_option("--jobs", sweep_m.jobs, "Sweep points solved concurrently");
  sweep_cmd->add_option("--out", sweep_m.out, "Output directory");

  QueueOptions queue_o;
  auto* queue_cmd = app.add_subcommand("validate-queue", "Simulate M/M/1 queues against 1/(mu-lambda)");
  queue_cmd->add_option("--rho", queue_o.rho, "Comma-separated utilisations (may be empty)");
  queue_cmd->add_option("--mu", queue_o.mu, "Service rate, packets/s");
  queue_cmd->add_option("--packets", queue_o.packets, "Measured packets per point");
  queue_cmd->add_option("--warmup", queue_o.warmup, "Discarded packets per point");
  queue_cmd->add_option("--seed", queue_o.seed, "Generator seed");
  queue_cmd->add_option("--out", queue_o.out, "Also write queue_validation.csv here");

  Manifest lp_m;
  lp_m.scenario = "power-prop";
  lp_m.out = "-";
  std::size_t breakpoints = 8;
  auto* lp_cmd = app.add_subcommand("export-lp", "Write a linearised model in CPLEX LP format");
  add_model_options(lp_cmd, lp_m, false);
  lp_cmd->add_option("--tasks-file", lp_m.tasks_file, "Task set JSON file");
  lp_cmd->add_option("--breakpoints", breakpoints, "Tangents per queue");
  lp_cmd->add_option("--out", lp_m.out, "Output directory, or - for stdout");

  Manifest tasks_m;
  tasks_m.out = "-";
  auto* tasks_cmd = app.add_subcommand("tasks", "Print the task set generated for each traffic point");
  tasks_cmd->add_option("--traffic", tasks_m.traffic, "Total traffic in Mb/s");
  tasks_cmd->add_option("--workload", tasks_m.workload, "scaled | fixed");
  tasks_cmd->add_option("--tasks", tasks_m.tasks, "Number of tasks");
  tasks_cmd->add_option("--out", tasks_m.out, "Output directory, or - for stdout");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (dump_arch) {
      out << architecture_to_json(default_architecture());
      if (app.get_subcommands().empty()) return kOk;
    }
    if (solve_cmd->parsed()) {
      solve_m.command = "solve";
      return cmd_solve(solve_m, out, err);
    }
    if (sweep_cmd->parsed()) {
      sweep_m.command = "sweep";
      return cmd_sweep(sweep_m, out, err);
    }
    if (queue_cmd->parsed()) return cmd_validate_queue(queue_o, out);
    if (lp_cmd->parsed()) {
      lp_m.command = "export-lp";
      return cmd_export_lp(lp_m, breakpoints, out, err);
    }
    if (tasks_cmd->parsed()) {
      tasks_m.command = "tasks";
      return cmd_tasks(tasks_m, out, err);
    }
    out << app.help();
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  }
}

}  // namespace vecalloc::cli

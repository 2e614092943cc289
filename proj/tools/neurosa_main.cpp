// neurosa: spiking ON-OFF Ising machine with Fowler-Nordheim annealing.
//
// Subcommands: solve, bench, ablate, oracle, analyze. A config file can
// mirror any flag (INI/TOML sections per subcommand); command-line flags win.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "neurosa/bench.hpp"
#include "neurosa/graphgen.hpp"
#include "neurosa/gset.hpp"
#include "neurosa/oracle.hpp"
#include "neurosa/record.hpp"

using namespace neurosa;

namespace {

struct SolverFlags {
  std::uint64_t iters = 1000000;
  std::uint64_t seed = 1;
  std::string schedule = "fn-log";
  double t0 = 0.3125;
  double c = 8.0e4;
  double dt = 1.0;
  double cold_t = -1.0;
  std::uint64_t restart_at = 0;
  std::string noise = "exponential";
  double noise_mean = -0.916;
  double noise_b = 2.718281828459045;
  double noise_eps = 0.0;
  double eta = 0.0;
  std::string arbiter = "select-then-test";
  bool hardware = false;
  double a = 1.0e6;
  int quant_bits = 64;
  std::uint64_t trace_every = 0;
  bool record_spikes = false;

  SolverConfig build() const {
    SolverConfig cfg;
    cfg.max_iter = iters;
    cfg.seed = seed;
    cfg.schedule.kind = schedule_kind_from_string(schedule);
    cfg.schedule.t0 = t0;
    cfg.schedule.c = c;
    cfg.schedule.dt = dt;
    cfg.schedule.restart_at = restart_at;
    cfg.schedule.cold_t = cold_t < 0.0 ? 0.01 * t0 : cold_t;
    cfg.noise.dist = noise_dist_from_string(noise);
    cfg.noise.target_mean = noise_mean;
    cfg.noise.b = noise_b;
    cfg.noise.eps = noise_eps;
    cfg.noise.eta = eta;
    if (quant_bits != 64) {
      cfg.noise.quant = QuantFormat::from_total_bits(quant_bits);
    }
    cfg.arbiter = arbiter_from_string(arbiter);
    cfg.hardware_faithful = hardware;
    cfg.a = a;
    cfg.trace_every = trace_every;
    cfg.record_spikes = record_spikes;
    return cfg;
  }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--iters", f.iters, "Iteration budget");
  cmd->add_option("--seed", f.seed, "Base RNG seed");
  cmd->add_option("--schedule", f.schedule,
                  "fn-log|inverse-time|exp-decay|constant|cold-restart");
  cmd->add_option("--t0", f.t0, "Temperature scale T0");
  cmd->add_option("--c", f.c, "Schedule normalizing constant C");
  cmd->add_option("--dt", f.dt, "Schedule time step per iteration");
  cmd->add_option("--cold-t", f.cold_t,
                  "cold-restart pre-restart temperature (default 0.01*T0)");
  cmd->add_option("--restart-at", f.restart_at,
                  "cold-restart: first iteration of the fn-log phase");
  cmd->add_option("--noise", f.noise, "exponential|gaussian|uniform");
  cmd->add_option("--noise-mean", f.noise_mean, "Threshold-noise mean");
  cmd->add_option("--b", f.noise_b, "Acceptance hyperparameter B (> 1)");
  cmd->add_option("--eps", f.noise_eps,
                  "Noise-log floor (0: auto for the active precision)");
  cmd->add_option("--eta", f.eta, "Bernoulli zero-probability");
  cmd->add_option("--arbiter", f.arbiter,
                  "select-then-test|test-then-select");
  cmd->add_flag("--hardware", f.hardware,
                "Hardware-faithful thresholds (A*N^B gate, RESET by "
                "subtraction)");
  cmd->add_option("--A", f.a, "RESET / pair-coupling constant");
  cmd->add_option("--quant-bits", f.quant_bits,
                  "Threshold precision: 8, 16, 32 or 64 (no quantization)")
      ->check(CLI::IsMember({8, 16, 32, 64}));
  cmd->add_option("--trace-every", f.trace_every,
                  "Checkpoint stride (0: endpoints only)");
  cmd->add_flag("--record-spikes", f.record_spikes,
                "Keep the full spike log in memory (needed for analyze)");
}

WeightedGraph load_graph(const std::string& path) {
  return load_gset_file(path);
}

int cmd_solve(const std::string& input, ProblemKind kind, SolverFlags& flags,
              std::size_t replicas, double beta, const std::string& out,
              const std::string& spikes_out, const std::string& series_out,
              const std::string& gains_out, double stop_ratio,
              std::optional<double> sota_value, const std::string& sota_table,
              std::size_t threads) {
  const auto g = load_graph(input);
  const auto problem =
      kind == ProblemKind::MaxCut ? maxcut_encode(g) : mis_encode(g, beta);
  std::optional<double> sota = sota_value;
  if (!sota && !sota_table.empty()) {
    sota = SotaTable::load(sota_table).lookup(g.name);
  }
  SolverConfig cfg = flags.build();
  if (!spikes_out.empty()) cfg.record_spikes = true;

  std::vector<RunTrace> traces;
  std::vector<double> seconds;
  const auto t_begin = std::chrono::steady_clock::now();
  if (replicas <= 1) {
    traces.push_back(stop_ratio > 0.0 ? run_with_stop(problem, cfg, stop_ratio)
                                      : run(problem, cfg));
    seconds.push_back(std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t_begin)
                          .count());
  } else {
    if (stop_ratio > 0.0) {
      std::cerr << "--stop-ratio applies to single runs only\n";
      return 1;
    }
    traces = run_parallel(problem, cfg, replicas, threads);
    const double total = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t_begin)
                             .count();
    seconds.assign(replicas, total / static_cast<double>(replicas));
  }

  double best = -1e300;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    SolverConfig used = cfg;
    used.seed = k == 0 ? cfg.seed : derive_seed(cfg.seed, k);
    const auto rec = make_run_record(g, kind, used, traces[k], seconds[k],
                                     sota, traces.size(), k, beta);
    best = std::max(best, rec.best_value);
    if (!out.empty()) {
      std::string path = out;
      if (traces.size() > 1) {
        const auto dot = path.rfind('.');
        const std::string suffix = "_" + std::to_string(k);
        if (dot == std::string::npos) {
          path += suffix;
        } else {
          path.insert(dot, suffix);
        }
      }
      write_run_record(rec, path);
    }
  }
  const auto& first = traces.front();
  if (!spikes_out.empty()) {
    std::ostringstream buf;
    write_spikes_csv(first, buf);
    write_csv_file(buf.str(), spikes_out);
  }
  if (!series_out.empty()) {
    std::ostringstream buf;
    write_best_series_csv(first, buf);
    write_csv_file(buf.str(), series_out);
  }
  if (!gains_out.empty()) {
    write_csv_file(gains_csv(first.improvements), gains_out);
  }

  std::cout << g.name << ": best " << to_string(kind) << " value " << best;
  if (sota && *sota != 0.0) {
    std::cout << " (normalized quality " << best / *sota << " vs " << *sota
              << ")";
  }
  std::cout << "\n";
  return 0;
}

int cmd_bench(BenchmarkSpec& spec, const std::string& out_dir) {
  const auto report = run_bench(spec);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_csv_file(bench_stats_csv(report), out_dir + "/bench_stats.csv");
    for (const auto& g : report.graphs) {
      write_csv_file(kde_csv(g.kde), out_dir + "/kde_" + g.name + ".csv");
      write_csv_file(hist_csv(g.hist), out_dir + "/hist_" + g.name + ".csv");
      for (std::size_t k = 0; k < g.records.size(); ++k) {
        write_run_record(g.records[k], out_dir + "/record_" + g.name + "_" +
                                           std::to_string(k) + ".json");
      }
    }
  }
  std::cout << bench_stats_csv(report);
  return 0;
}

int cmd_ablate(const std::string& input, ProblemKind kind, SolverFlags& flags,
               std::size_t seeds, double beta, std::optional<double> sota,
               const std::string& out, std::size_t threads) {
  const auto g = load_graph(input);
  const auto report = run_ablation(g, kind, flags.build(), seeds, sota,
                                   threads, beta);
  const auto csv = ablate_csv(report);
  if (!out.empty()) write_csv_file(csv, out);
  std::cout << csv;
  return 0;
}

int cmd_oracle(const std::string& input, ProblemKind kind, double beta) {
  const auto g = load_graph(input);
  if (kind == ProblemKind::MaxCut) {
    const auto problem = maxcut_encode(g);
    const auto res = brute_force(problem);
    const auto cut = maxcut_decode(g, res.best_state);
    std::cout << g.name << ": ground energy " << res.best_value << ", max cut "
              << cut.cut_value << ", optima " << res.optima_count << "\n";
  } else {
    const auto size = max_independent_set_size(g);
    const auto res = brute_force(mis_encode(g, beta));
    std::cout << g.name << ": MIS size " << size << ", ground energy "
              << res.best_value << ", optima " << res.optima_count << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& spikes_path, std::uint32_t dim,
                std::uint64_t iterations, std::uint64_t window,
                std::uint64_t overlap, std::size_t components,
                const std::string& out) {
  std::ifstream in(spikes_path);
  if (!in) throw std::runtime_error("cannot open spike table: " + spikes_path);
  RunTrace trace;
  std::string line;
  std::getline(in, line);  // header
  std::uint64_t max_iter = 0;
  std::uint32_t max_neuron = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SpikeEvent ev;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string dir;
    if (!(fields >> ev.iteration >> ev.neuron >> dir >> ev.delta_h)) {
      throw std::runtime_error("malformed spike row: " + line);
    }
    ev.direction = dir == "on" ? SpikeDirection::On : SpikeDirection::Off;
    max_iter = std::max(max_iter, ev.iteration);
    max_neuron = std::max(max_neuron, ev.neuron);
    trace.spikes.push_back(ev);
  }
  trace.spike_count = trace.spikes.size();
  trace.dim = dim != 0 ? dim : max_neuron + 1;
  trace.iterations = iterations != 0 ? iterations : max_iter;

  const auto pca = analyze_trace(trace, window, overlap, components);
  if (pca.degenerate) {
    std::cout << "trace is degenerate (no spikes); nothing to project\n";
    return 0;
  }
  const auto csv = pca_csv(pca);
  if (!out.empty()) write_csv_file(csv, out);
  std::cout << "windows " << pca.windows << ", captured variance fraction "
            << pca.captured_fraction() << "\n";
  if (out.empty()) std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NeuroSA spiking ON-OFF Ising machine"};
  app.set_config("--config", "", "Config file mirroring the flags");
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  std::string input;
  std::string kind_name = "maxcut";
  SolverFlags flags;
  std::size_t replicas = 1;
  double beta = 0.75;
  std::string out;
  std::string spikes_out;
  std::string series_out;
  std::string gains_out;
  double stop_ratio = 0.0;
  double sota_value = 0.0;
  bool sota_set = false;
  std::string sota_table;
  std::size_t threads = 0;
  solve->add_option("-i,--input", input, "Gset-format graph file")->required();
  solve->add_option("--kind", kind_name, "maxcut|mis");
  add_solver_flags(solve, flags);
  solve->add_option("--replicas", replicas, "Independent parallel instances");
  solve->add_option("--beta", beta, "MIS edge penalty in (0,1)");
  solve->add_option("--out", out, "Run-record JSON path");
  solve->add_option("--spikes-out", spikes_out, "Spike-table CSV path");
  solve->add_option("--series-out", series_out, "Best-value series CSV path");
  solve->add_option("--gains-out", gains_out, "Improvement-log CSV path");
  solve->add_option("--stop-ratio", stop_ratio,
                    "Halt once (iters since last gain)/total exceeds this");
  solve->add_option("--sota", sota_value, "Reference value for this instance")
      ->each([&](const std::string&) { sota_set = true; });
  solve->add_option("--sota-table", sota_table, "CSV table of reference values");
  solve->add_option("--threads", threads, "Worker threads for replicas");

  // bench
  auto* bench = app.add_subcommand("bench", "Distribution benchmark");
  std::vector<std::string> graphs;
  std::string bench_kind = "maxcut";
  SolverFlags bench_flags;
  std::size_t runs = 5;
  double bench_beta = 0.75;
  std::string bench_sota_table;
  std::string out_dir;
  std::size_t bench_threads = 0;
  bench->add_option("-g,--graphs", graphs, "Graph files")->required();
  bench->add_option("--kind", bench_kind, "maxcut|mis");
  add_solver_flags(bench, bench_flags);
  bench->add_option("--runs", runs, "Runs per graph");
  bench->add_option("--beta", bench_beta, "MIS edge penalty");
  bench->add_option("--sota-table", bench_sota_table,
                    "CSV table of reference values");
  bench->add_option("--out-dir", out_dir, "Directory for stats/KDE/records");
  bench->add_option("--threads", bench_threads, "Worker threads");

  // ablate
  auto* ablate = app.add_subcommand("ablate", "Schedule x noise grid");
  std::string ab_input;
  std::string ab_kind = "maxcut";
  SolverFlags ab_flags;
  std::size_t ab_seeds = 5;
  double ab_beta = 0.75;
  double ab_sota = 0.0;
  bool ab_sota_set = false;
  std::string ab_out;
  std::size_t ab_threads = 0;
  ablate->add_option("-i,--input", ab_input, "Graph file")->required();
  ablate->add_option("--kind", ab_kind, "maxcut|mis");
  add_solver_flags(ablate, ab_flags);
  ablate->add_option("--seeds", ab_seeds, "Seeds per grid cell");
  ablate->add_option("--beta", ab_beta, "MIS edge penalty");
  ablate->add_option("--sota", ab_sota, "Reference value")
      ->each([&](const std::string&) { ab_sota_set = true; });
  ablate->add_option("--out", ab_out, "Grid CSV path");
  ablate->add_option("--threads", ab_threads, "Worker threads");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact ground truth (<= 26 vars)");
  std::string or_input;
  std::string or_kind = "maxcut";
  double or_beta = 0.75;
  oracle->add_option("-i,--input", or_input, "Graph file")->required();
  oracle->add_option("--kind", or_kind, "maxcut|mis");
  oracle->add_option("--beta", or_beta, "MIS edge penalty");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "PCA over a spike table");
  std::string an_spikes;
  std::uint32_t an_dim = 0;
  std::uint64_t an_iters = 0;
  std::uint64_t an_window = 10000;
  std::uint64_t an_overlap = 5000;
  std::size_t an_components = 3;
  std::string an_out;
  analyze->add_option("--spikes", an_spikes, "Spike-table CSV from solve")
      ->required();
  analyze->add_option("--dim", an_dim, "Neuron count (default: inferred)");
  analyze->add_option("--iterations", an_iters,
                      "Total iterations (default: last spike)");
  analyze->add_option("--window", an_window, "Window length in iterations");
  analyze->add_option("--overlap", an_overlap, "Window overlap in iterations");
  analyze->add_option("--components", an_components, "Principal components");
  analyze->add_option("--out", an_out, "Trajectory CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return cmd_solve(input, problem_kind_from_string(kind_name), flags,
                       replicas, beta, out, spikes_out, series_out, gains_out,
                       stop_ratio,
                       sota_set ? std::optional<double>(sota_value)
                                : std::nullopt,
                       sota_table, threads);
    }
    if (bench->parsed()) {
      BenchmarkSpec spec;
      spec.graph_paths = graphs;
      spec.kind = problem_kind_from_string(bench_kind);
      spec.runs_per_graph = runs;
      spec.solver = bench_flags.build();
      spec.mis_beta = bench_beta;
      if (!bench_sota_table.empty()) spec.sota = SotaTable::load(bench_sota_table);
      spec.workers = bench_threads;
      return cmd_bench(spec, out_dir);
    }
    if (ablate->parsed()) {
      return cmd_ablate(ab_input, problem_kind_from_string(ab_kind), ab_flags,
                        ab_seeds, ab_beta,
                        ab_sota_set ? std::optional<double>(ab_sota)
                                    : std::nullopt,
                        ab_out, ab_threads);
    }
    if (oracle->parsed()) {
      return cmd_oracle(or_input, problem_kind_from_string(or_kind), or_beta);
    }
    if (analyze->parsed()) {
      return cmd_analyze(an_spikes, an_dim, an_iters, an_window, an_overlap,
                         an_components, an_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

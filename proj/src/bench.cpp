#include "neurosa/bench.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "neurosa/gset.hpp"

namespace neurosa {

namespace {

std::string fmt(double x) { return nlohmann::json(x).dump(); }

void for_each_parallel(std::size_t tasks, std::size_t workers,
                       const std::function<void(std::size_t)>& body) {
  if (workers == 0) {
    workers = std::min<std::size_t>(tasks, std::thread::hardware_concurrency());
    if (workers == 0) workers = 1;
  }
  workers = std::min(workers, tasks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto loop = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(loop);
  for (auto& t : pool) t.join();
}

}  // namespace

SotaTable SotaTable::from_string(const std::string& text) {
  SotaTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("sota table line " + std::to_string(lineno) +
                               ": expected 'name,value'");
    }
    const std::string name = line.substr(0, comma);
    table.values_[name] = std::stod(line.substr(comma + 1));
  }
  return table;
}

SotaTable SotaTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sota table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

std::optional<double> SotaTable::lookup(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

ProblemKind problem_kind_from_string(const std::string& name) {
  if (name == "maxcut" || name == "max-cut") return ProblemKind::MaxCut;
  if (name == "mis") return ProblemKind::Mis;
  throw std::invalid_argument("unknown problem kind: " + name);
}

std::string to_string(ProblemKind kind) {
  return kind == ProblemKind::MaxCut ? "maxcut" : "mis";
}

double decode_best_value(const WeightedGraph& g, ProblemKind kind,
                         const RunTrace& trace) {
  if (kind == ProblemKind::MaxCut) {
    return static_cast<double>(maxcut_decode(g, trace.best_state).cut_value);
  }
  return static_cast<double>(mis_decode(g, trace.best_state, true).size);
}

RunRecord make_run_record(const WeightedGraph& g, ProblemKind kind,
                          const SolverConfig& cfg, const RunTrace& trace,
                          double wall_time_sec, std::optional<double> sota,
                          std::size_t replicas, std::size_t replica_index,
                          double mis_beta) {
  RunRecord r;
  r.problem_name = g.name.empty() ? "unnamed" : g.name;
  r.kind = to_string(kind);
  r.dim = trace.dim;
  r.config = cfg;
  r.replicas = replicas;
  r.replica_index = replica_index;
  r.mis_beta = kind == ProblemKind::Mis ? mis_beta : 0.0;
  r.best_value = decode_best_value(g, kind, trace);
  r.best_energy = trace.best_energy;
  r.best_state = state_to_bitstring(trace.best_state);
  r.iterations = trace.iterations;
  r.spike_count = trace.spike_count;
  r.wall_time_sec = wall_time_sec;
  r.sota = sota;
  const double total_w = static_cast<double>(g.total_weight());
  for (const auto& s : trace.samples) {
    r.checkpoint_iterations.push_back(s.iteration);
    // Checkpoints in decoded units via the monotone energy identities:
    // cut = (W - E)/2; penalized set objective = -2E.
    const double v = kind == ProblemKind::MaxCut
                         ? 0.5 * (total_w - s.best_energy)
                         : -2.0 * s.best_energy;
    r.checkpoint_values.push_back(v);
  }
  return r;
}

RunTrace run_with_stop(const IsingProblem& problem, const SolverConfig& cfg,
                       double ratio) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("run_with_stop: ratio must lie in (0, 1)");
  }
  Network net(problem, cfg);
  RunTrace trace;
  trace.domain = problem.domain();
  trace.dim = static_cast<std::uint32_t>(problem.dim());
  trace.initial_energy = net.current_energy();
  double best = net.best_energy();

  std::uint64_t i = 0;
  std::uint64_t last_gain = 0;
  bool gained = false;
  while (i < cfg.max_iter) {
    ++i;
    const auto event = net.step();
    if (event) {
      ++trace.spike_count;
      if (cfg.record_spikes) trace.spikes.push_back(*event);
      if (net.best_energy() < best) {
        best = net.best_energy();
        trace.best_iteration = i;
        trace.improvements.push_back({i, best});
        last_gain = i;
        gained = true;
      }
    }
    if (cfg.trace_every != 0 && i % cfg.trace_every == 0) {
      trace.samples.push_back(
          {i, best, net.current_energy(), net.last_threshold()});
    }
    if (gained && (i & 1023) == 0) {
      const double r = static_cast<double>(i - last_gain) /
                       static_cast<double>(i);
      if (r > ratio) break;
    }
  }
  trace.iterations = i;
  trace.best_energy = best;
  trace.best_state = net.best_state();
  trace.final_energy = net.current_energy();
  trace.final_state = net.state();
  return trace;
}

BenchReport run_bench(const BenchmarkSpec& spec) {
  BenchReport report;
  for (const auto& path : spec.graph_paths) {
    const WeightedGraph g = load_gset_file(path);
    const IsingProblem problem = spec.kind == ProblemKind::MaxCut
                                     ? maxcut_encode(g)
                                     : mis_encode(g, spec.mis_beta);
    GraphBenchResult res;
    res.name = g.name;
    res.metrics = graph_metrics(g);
    res.sota = spec.sota.lookup(g.name);
    if (!res.sota) {
      std::cerr << "warning: no SOTA entry for '" << g.name
                << "'; reporting raw values only\n";
    }
    res.values.resize(spec.runs_per_graph);
    res.records.resize(spec.runs_per_graph);
    for_each_parallel(spec.runs_per_graph, spec.workers, [&](std::size_t k) {
      SolverConfig cfg = spec.solver;
      cfg.seed = derive_seed(spec.solver.seed, k);
      const auto start = std::chrono::steady_clock::now();
      const RunTrace trace = run(problem, cfg);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
      res.values[k] = decode_best_value(g, spec.kind, trace);
      res.records[k] = make_run_record(g, spec.kind, cfg, trace, secs, res.sota,
                                       spec.runs_per_graph, k, spec.mis_beta);
    });
    res.value_stats = summarize(res.values);
    if (res.sota) {
      res.qualities.reserve(res.values.size());
      for (const double v : res.values) res.qualities.push_back(v / *res.sota);
      res.quality_stats = summarize(res.qualities);
      res.kde = kde_silverman(res.qualities);
      res.hist = histogram(res.qualities, 10);
    } else {
      res.kde = kde_silverman(res.values);
      res.hist = histogram(res.values, 10);
    }
    report.graphs.push_back(std::move(res));
  }
  return report;
}

AblateReport run_ablation(const WeightedGraph& graph, ProblemKind kind,
                          const SolverConfig& base, std::size_t seeds_per_cell,
                          std::optional<double> sota, std::size_t workers,
                          double mis_beta) {
  const IsingProblem problem = kind == ProblemKind::MaxCut
                                   ? maxcut_encode(graph)
                                   : mis_encode(graph, mis_beta);
  const ScheduleKind schedules[] = {ScheduleKind::FnLog, ScheduleKind::ExpDecay,
                                    ScheduleKind::InverseTime};
  const NoiseDist noises[] = {NoiseDist::Exponential, NoiseDist::Gaussian,
                              NoiseDist::Uniform};
  AblateReport report;
  report.graph_name = graph.name;
  report.sota = sota;
  for (const auto sched : schedules) {
    for (const auto noise : noises) {
      AblateCell cell;
      cell.schedule = sched;
      cell.noise = noise;
      cell.values.resize(seeds_per_cell);
      report.cells.push_back(std::move(cell));
    }
  }
  const std::size_t tasks = report.cells.size() * seeds_per_cell;
  for_each_parallel(tasks, workers, [&](std::size_t t) {
    const std::size_t ci = t / seeds_per_cell;
    const std::size_t s = t % seeds_per_cell;
    auto& cell = report.cells[ci];
    SolverConfig cfg = base;
    cfg.schedule.kind = cell.schedule;
    cfg.noise.dist = cell.noise;
    cfg.seed = derive_seed(derive_seed(base.seed, ci), s);
    const RunTrace trace = run(problem, cfg);
    cell.values[s] = decode_best_value(graph, kind, trace);
  });
  for (auto& cell : report.cells) cell.stats = summarize(cell.values);
  return report;
}

std::string bench_stats_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "graph,runs,sota,mean,sd,min,max,quality_mean,quality_sd,quality_min,"
         "quality_max,avg_fanout,degree_entropy,transitivity\n";
  for (const auto& g : report.graphs) {
    out << g.name << ',' << g.values.size() << ','
        << (g.sota ? fmt(*g.sota) : "") << ',' << fmt(g.value_stats.mean) << ','
        << fmt(g.value_stats.sd) << ',' << fmt(g.value_stats.min) << ','
        << fmt(g.value_stats.max) << ',';
    if (g.sota) {
      out << fmt(g.quality_stats.mean) << ',' << fmt(g.quality_stats.sd) << ','
          << fmt(g.quality_stats.min) << ',' << fmt(g.quality_stats.max);
    } else {
      out << ",,,";
    }
    out << ',' << fmt(g.metrics.average_fanout) << ','
        << fmt(g.metrics.degree_entropy) << ',' << fmt(g.metrics.transitivity)
        << '\n';
  }
  return out.str();
}

std::string kde_csv(const KdeResult& kde) {
  std::ostringstream out;
  out << "x,density\n";
  if (kde.degenerate) {
    out << fmt(kde.point) << ",inf\n";
    return out.str();
  }
  for (std::size_t i = 0; i < kde.grid.size(); ++i) {
    out << fmt(kde.grid[i]) << ',' << fmt(kde.density[i]) << '\n';
  }
  return out.str();
}

std::string hist_csv(const Histogram& hist) {
  std::ostringstream out;
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i + 1 < hist.edges.size(); ++i) {
    out << fmt(hist.edges[i]) << ',' << fmt(hist.edges[i + 1]) << ','
        << hist.counts[i] << '\n';
  }
  return out.str();
}

std::string ablate_csv(const AblateReport& report) {
  std::ostringstream out;
  out << "schedule,noise,runs,mean,sd,min,max\n";
  for (const auto& c : report.cells) {
    out << to_string(c.schedule) << ',' << to_string(c.noise) << ','
        << c.values.size() << ',' << fmt(c.stats.mean) << ',' << fmt(c.stats.sd)
        << ',' << fmt(c.stats.min) << ',' << fmt(c.stats.max) << '\n';
  }
  return out.str();
}

std::string pca_csv(const PcaTrajectory& pca) {
  std::ostringstream out;
  out << "window";
  for (std::size_t k = 0; k < pca.components; ++k) out << ",pc" << k + 1;
  out << '\n';
  for (std::size_t w = 0; w < pca.coords.size(); ++w) {
    out << w;
    for (std::size_t k = 0; k < pca.components; ++k) {
      out << ',' << fmt(pca.coords[w][k]);
    }
    out << '\n';
  }
  return out.str();
}

std::string gains_csv(const std::vector<GainEvent>& events) {
  std::ostringstream out;
  out << "iteration,best_value\n";
  for (const auto& e : events) {
    out << e.iteration << ',' << fmt(e.best_energy) << '\n';
  }
  return out.str();
}

}  // namespace neurosa

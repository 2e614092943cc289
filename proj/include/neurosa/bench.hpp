#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neurosa/record.hpp"
#include "neurosa/stats.hpp"

namespace neurosa {

// Best-known objective values per instance name (e.g. the Gset table shipped
// in data/gset_sota.csv). CSV layout: "name,value", '#' comments allowed.
class SotaTable {
 public:
  static SotaTable load(const std::string& path);
  static SotaTable from_string(const std::string& text);

  std::optional<double> lookup(const std::string& name) const;
  std::size_t size() const { return values_.size(); }
  void set(const std::string& name, double value) { values_[name] = value; }

 private:
  std::map<std::string, double> values_;
};

enum class ProblemKind { MaxCut, Mis };
ProblemKind problem_kind_from_string(const std::string& name);
std::string to_string(ProblemKind kind);

struct BenchmarkSpec {
  std::vector<std::string> graph_paths;
  ProblemKind kind = ProblemKind::MaxCut;
  std::size_t runs_per_graph = 5;
  SolverConfig solver;
  double mis_beta = 0.75;
  SotaTable sota;
  std::size_t workers = 0;
};

struct GraphBenchResult {
  std::string name;
  GraphMetrics metrics;
  std::optional<double> sota;
  std::vector<double> values;      // decoded objective per run
  std::vector<double> qualities;   // values / sota, when sota known
  SummaryStats value_stats;
  SummaryStats quality_stats;      // meaningful only when sota known
  KdeResult kde;                   // over qualities (or raw values w/o sota)
  Histogram hist;
  std::vector<RunRecord> records;
};

struct BenchReport {
  std::vector<GraphBenchResult> graphs;
};

// Runs `runs_per_graph` seeded solves per graph (seed = derive_seed(base, k))
// and assembles per-graph distribution statistics. Emits a warning line per
// graph that has no SOTA entry; raw values are still reported.
BenchReport run_bench(const BenchmarkSpec& spec);

// Schedule x noise ablation grid on a single graph, `seeds_per_cell` runs
// each. All cells share T0/C/dt and iteration budget.
struct AblateCell {
  ScheduleKind schedule;
  NoiseDist noise;
  std::vector<double> values;
  SummaryStats stats;
};

struct AblateReport {
  std::string graph_name;
  std::optional<double> sota;
  std::vector<AblateCell> cells;  // 9 cells: 3 schedules x 3 noises
};

AblateReport run_ablation(const WeightedGraph& graph, ProblemKind kind,
                          const SolverConfig& base, std::size_t seeds_per_cell,
                          std::optional<double> sota, std::size_t workers = 0,
                          double mis_beta = 0.75);

// Decoded objective of a trace's best state (cut value or repaired set size).
double decode_best_value(const WeightedGraph& g, ProblemKind kind,
                         const RunTrace& trace);

// Like run(), but halts once (iterations since the last best-value
// improvement) / (iterations so far) exceeds `ratio`. Never halts before the
// first improvement; the halt condition is evaluated every 1024 iterations.
RunTrace run_with_stop(const IsingProblem& problem, const SolverConfig& cfg,
                       double ratio);

// Builds the persistent record for one solve (checkpoints in decoded units
// where the decode is monotone in energy, i.e. derived from best energy).
RunRecord make_run_record(const WeightedGraph& g, ProblemKind kind,
                          const SolverConfig& cfg, const RunTrace& trace,
                          double wall_time_sec, std::optional<double> sota,
                          std::size_t replicas = 1, std::size_t replica_index = 0,
                          double mis_beta = 0.0);

// CSV writers for the report tables.
std::string bench_stats_csv(const BenchReport& report);
std::string kde_csv(const KdeResult& kde);
std::string hist_csv(const Histogram& hist);
std::string ablate_csv(const AblateReport& report);
std::string pca_csv(const PcaTrajectory& pca);
std::string gains_csv(const std::vector<GainEvent>& events);

}  // namespace neurosa

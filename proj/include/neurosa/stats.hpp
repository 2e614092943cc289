#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "neurosa/network.hpp"
#include "neurosa/problems.hpp"

namespace neurosa {

// ---- Gain tracking / stopping criterion ------------------------------------

// Log of best-value improvement events. The stopping statistic is
//   r = (iterations since the last improvement) / (iterations so far),
// recomputed from the log at query time; r -> 1 as further gains become
// exponentially expensive.
class GainTracker {
 public:
  void record(std::uint64_t iteration, double best_value);
  std::size_t gain_count() const { return events_.size(); }
  const std::vector<GainEvent>& events() const { return events_; }

  // Absent until the first improvement has been recorded.
  std::optional<double> stopping_ratio(std::uint64_t current_iteration) const;

 private:
  std::vector<GainEvent> events_;
};

// ---- Kernel density estimate ------------------------------------------------

// Gaussian-kernel KDE with Silverman's rule-of-thumb bandwidth
// 0.9 * min(sd, iqr/1.34) * n^(-1/5). `degenerate` is set when the samples
// have zero spread (all mass at one point); grid/density are then empty.
struct KdeResult {
  bool degenerate = false;
  double point = 0.0;  // location of the point mass when degenerate
  double bandwidth = 0.0;
  std::vector<double> grid;
  std::vector<double> density;

  // Trapezoid integral over the reported grid.
  double integral() const;
};

KdeResult kde_silverman(const std::vector<double>& samples,
                        std::size_t grid_points = 2048);

// Plain histogram over [min, max], co-emitted with every KDE.
struct Histogram {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<std::uint64_t> counts;
};

Histogram histogram(const std::vector<double>& samples, std::size_t bins);

// ---- PCA over windowed spike counts -----------------------------------------

// Spikes binned per neuron into windows of `window` iterations advanced by
// (window - overlap); ON and OFF events both count toward the pair's
// activity. Rows are centered and projected onto the leading principal
// directions of the window-vector covariance.
struct PcaTrajectory {
  bool degenerate = false;            // no spikes at all
  std::size_t windows = 0;
  std::size_t components = 0;
  std::vector<double> eigenvalues;    // top `components`, descending
  double total_variance = 0.0;        // sum of all eigenvalues (trace)
  std::vector<std::vector<double>> coords;    // windows x components
  std::vector<std::vector<double>> loadings;  // components x dim

  double captured_fraction() const;
};

PcaTrajectory analyze_trace(const RunTrace& trace, std::uint64_t window,
                            std::uint64_t overlap, std::size_t components = 3);

// Deterministic cyclic Jacobi eigensolver for symmetric matrices (row-major
// n x n). Returns eigenvalues descending with matching eigenvectors.
// Off-diagonal residual tolerance 1e-10 (relative), sweeps capped.
struct EigenResult {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
EigenResult jacobi_eigen_symmetric(std::vector<double> a, std::size_t n);

// ---- Graph complexity metrics ------------------------------------------------

struct GraphMetrics {
  double average_fanout = 0.0;
  double degree_entropy = 0.0;  // Shannon entropy of the degree distribution
  double transitivity = 0.0;    // 3 * triangles / connected triples
};

GraphMetrics graph_metrics(const WeightedGraph& g);

// ---- Summary stats -----------------------------------------------------------

struct SummaryStats {
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double max = 0.0;
};

SummaryStats summarize(const std::vector<double>& xs);

}  // namespace neurosa

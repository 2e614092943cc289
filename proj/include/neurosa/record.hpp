#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "neurosa/network.hpp"

namespace neurosa {

// Persistent summary of one solver run: the full configuration needed to
// reproduce it, the outcome, and the per-checkpoint best-value series.
// Serialized as versioned JSON (schema field "neurosa-run/1"); wall_time_sec
// is the only field that is not reproducible across executions.
struct RunRecord {
  std::string problem_name;
  std::string kind;  // "maxcut", "mis" or "ising"
  std::uint32_t dim = 0;
  SolverConfig config;
  std::size_t replicas = 1;
  std::size_t replica_index = 0;
  double mis_beta = 0.0;  // 0 when kind != "mis"

  double best_value = 0.0;  // decoded objective (cut value / set size / -energy)
  double best_energy = 0.0;
  std::string best_state;  // compact bitstring, '1' = +1/1, '0' = -1/0
  std::uint64_t iterations = 0;
  std::uint64_t spike_count = 0;
  double wall_time_sec = 0.0;
  std::optional<double> sota;  // reference value, when known

  // (iteration, best_value) checkpoints in decoded units.
  std::vector<std::uint64_t> checkpoint_iterations;
  std::vector<double> checkpoint_values;

  std::optional<double> normalized_quality() const {
    if (!sota || *sota == 0.0) return std::nullopt;
    return best_value / *sota;
  }
};

std::string state_to_bitstring(const StateVector& s);
StateVector bitstring_to_state(const std::string& bits, Domain domain);

// Lossless, byte-deterministic, locale-independent JSON round trip.
std::string run_record_to_json(const RunRecord& record);
RunRecord run_record_from_json(const std::string& text);
void write_run_record(const RunRecord& record, const std::string& path);
RunRecord read_run_record(const std::string& path);

// CSV exports (header always present, so an empty run yields a header-only
// file). Columns are fixed: best-value series "iteration,best_value";
// spikes "iteration,neuron,direction,delta_h" with direction "on"/"off".
void write_best_series_csv(const RunTrace& trace, std::ostream& out);
void write_spikes_csv(const RunTrace& trace, std::ostream& out);
void write_csv_file(const std::string& content, const std::string& path);

}  // namespace neurosa

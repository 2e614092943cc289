#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neurosa/ising.hpp"
#include "neurosa/noise.hpp"
#include "neurosa/rng.hpp"
#include "neurosa/schedule.hpp"

namespace neurosa {

// How the at-most-one-spike-per-iteration rule is enforced.
//   SelectThenTest: draw one neuron uniformly, draw one noise value, fire if
//     its eligible potential beats the threshold (lightweight variant; one
//     noise draw per iteration).
//   TestThenSelect: draw an independent threshold per neuron, collect every
//     neuron whose eligible potential beats its own threshold, then pick one
//     of the active set uniformly and discard the rest.
enum class ArbiterMode { SelectThenTest, TestThenSelect };

enum class SpikeDirection : std::uint8_t { On = 0, Off = 1 };

// One accepted flip. delta_h is the full Hamiltonian change of the flip.
struct SpikeEvent {
  std::uint64_t iteration = 0;  // 1-based iteration at which the spike fired
  std::uint32_t neuron = 0;
  SpikeDirection direction = SpikeDirection::On;
  double delta_h = 0.0;

  bool operator==(const SpikeEvent&) const = default;
};

struct SolverConfig {
  std::uint64_t max_iter = 1000000;
  std::uint64_t seed = 1;
  ArbiterMode arbiter = ArbiterMode::SelectThenTest;
  // Hardware-faithful variant: per-neuron threshold T*N^E + A*N^B, the A
  // synaptic coupling between the ON/OFF partners, and RESET by subtraction.
  // Equivalent to the gated TestThenSelect arbiter at eta = 0.
  bool hardware_faithful = false;
  double a = 1.0e6;  // RESET / pair-coupling constant
  AnnealSchedule schedule;
  NoiseConfig noise;
  std::uint64_t trace_every = 0;  // 0: no periodic samples
  bool record_spikes = true;
};

struct TraceSample {
  std::uint64_t iteration = 0;
  double best_energy = 0.0;
  double current_energy = 0.0;
  double threshold = 0.0;  // last threshold drawn at this iteration

  bool operator==(const TraceSample&) const = default;
};

struct GainEvent {
  std::uint64_t iteration = 0;
  double best_energy = 0.0;

  bool operator==(const GainEvent&) const = default;
};

struct RunTrace {
  Domain domain = Domain::Spin;
  std::uint32_t dim = 0;
  std::uint64_t iterations = 0;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  double best_energy = 0.0;
  std::uint64_t best_iteration = 0;
  StateVector best_state;
  StateVector final_state;
  std::uint64_t spike_count = 0;
  std::vector<SpikeEvent> spikes;       // empty unless record_spikes
  std::vector<TraceSample> samples;     // every trace_every iterations
  std::vector<GainEvent> improvements;  // every strict best-energy improvement

  bool operator==(const RunTrace&) const = default;
};

// ON-OFF neuron pair network over one shared read-only problem. Owns its
// mutable state exclusively; independent instances may run concurrently.
//
// Each pair p holds membrane potentials for both sides. At rest
//   v_on  = -dH(flip p up)/2,    v_off = -dH(flip p down)/2 = -v_on,
// which in the spin domain is the literal local field: v_on = -sum Q_pj s_j.
// A side fires when its potential exceeds the noisy threshold T_n * N^E; the
// spin state bit selects which side is eligible. In the hardware-faithful
// mode the eligible side additionally carries the +A excitation from its
// partner's last spike, the threshold carries A * N^B, and a firing side is
// RESET by subtracting A.
class Network {
 public:
  Network(const IsingProblem& problem, const SolverConfig& cfg,
          const StateVector* initial = nullptr);

  // Advances one iteration; returns the spike if one fired.
  std::optional<SpikeEvent> step();

  std::uint64_t iteration() const { return iteration_; }
  const StateVector& state() const { return state_; }
  double current_energy() const { return energy_; }
  double best_energy() const { return best_energy_; }
  const StateVector& best_state() const { return best_state_; }
  // Rest-value potentials (hardware mode: A offsets removed).
  double potential_on(std::size_t p) const;
  double potential_off(std::size_t p) const;
  double last_threshold() const { return last_threshold_; }

  const IsingProblem& problem() const { return problem_; }

 private:
  const IsingProblem& problem_;
  SolverConfig cfg_;
  Rng rng_;
  StateVector state_;
  std::vector<double> v_on_;
  std::vector<double> v_off_;
  std::uint64_t iteration_ = 0;
  double energy_ = 0.0;
  double best_energy_ = 0.0;
  StateVector best_state_;
  double noise_shift_ = 0.0;
  double noise_eps_ = 0.0;
  double last_threshold_ = 0.0;
  std::vector<std::uint32_t> active_;  // scratch for TestThenSelect

  double draw_noise();
  std::optional<SpikeEvent> fire(std::uint32_t p);
  void apply_spike(std::uint32_t p);
};

// Executes cfg.max_iter iterations. Deterministic given (problem, cfg.seed).
RunTrace run(const IsingProblem& problem, const SolverConfig& cfg,
             const StateVector* initial = nullptr);

// `replicas` independent runs; replica 0 uses cfg.seed itself (so a single
// replica reproduces run() exactly) and replica k > 0 uses
// derive_seed(cfg.seed, k). Results are index-ordered and independent of
// worker interleaving.
std::vector<RunTrace> run_parallel(const IsingProblem& problem,
                                   const SolverConfig& cfg,
                                   std::size_t replicas,
                                   std::size_t workers = 0);

ArbiterMode arbiter_from_string(const std::string& name);
std::string to_string(ArbiterMode mode);

}  // namespace neurosa

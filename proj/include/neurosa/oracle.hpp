#pragma once

#include <cstdint>

#include "neurosa/network.hpp"
#include "neurosa/problems.hpp"

namespace neurosa {

struct OracleResult {
  StateVector best_state;
  double best_value = 0.0;
  std::uint64_t optima_count = 0;  // states attaining the optimum exactly
};

// Exhaustive minimization over all 2^k assignments of the free variables
// (frozen variables stay pinned). Enumeration follows a binary-reflected
// Gray code so each visited state is one delta_energy away from the last.
// Guarded at 26 free variables.
OracleResult brute_force(const IsingProblem& problem);

// Exact maximum-independent-set size by exhaustive bitmask enumeration;
// guarded at 26 vertices.
std::uint32_t max_independent_set_size(const WeightedGraph& g);

// Reference single-flip Metropolis annealer, sharing the schedule/noise code:
// pick a free variable uniformly, recompute dH with delta_energy, accept iff
// -dH/2 > T_n * N^E. Consumes randomness in the same (index, noise) order as
// the SelectThenTest network, so the two produce identical accepted-flip
// sequences under a shared seed.
RunTrace reference_sa(const IsingProblem& problem,
                      const AnnealSchedule& schedule, const NoiseConfig& noise,
                      std::uint64_t seed, std::uint64_t max_iter,
                      bool record_spikes = true,
                      std::uint64_t trace_every = 0);

}  // namespace neurosa

#include "neurosa/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace neurosa {

OracleResult brute_force(const IsingProblem& problem) {
  const auto& free = problem.free_indices();
  const std::size_t k = free.size();
  if (k > 26) {
    throw std::invalid_argument("brute_force: " + std::to_string(k) +
                                " free variables exceed the 26-variable guard");
  }

  // Start from the all-down corner of the free subcube.
  StateVector s(problem.dim(), 1);
  for (const auto p : free) {
    s[p] = problem.domain() == Domain::Spin ? std::int8_t{-1} : std::int8_t{0};
  }
  double energy = problem.energy(s);

  OracleResult result{s, energy, 1};
  const std::uint64_t total = k == 0 ? 1 : (1ULL << k);
  for (std::uint64_t code = 1; code < total; ++code) {
    const std::size_t bit = std::countr_zero(code);
    const std::size_t p = free[bit];
    energy += problem.delta_energy(s, p);
    problem.flip(s, p);
    if (energy < result.best_value) {
      result.best_value = energy;
      result.best_state = s;
      result.optima_count = 1;
    } else if (energy == result.best_value) {
      ++result.optima_count;
    }
  }
  return result;
}

std::uint32_t max_independent_set_size(const WeightedGraph& g) {
  if (g.n > 26) {
    throw std::invalid_argument(
        "max_independent_set_size: vertex count exceeds the 26-vertex guard");
  }
  std::vector<std::uint32_t> nbr(g.n, 0);
  for (const auto& e : g.edges) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  std::uint32_t best = 0;
  const std::uint32_t total = g.n == 0 ? 0 : (1u << g.n);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) <= static_cast<int>(best)) continue;
    bool ok = true;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const std::uint32_t v = std::countr_zero(m);
      if ((nbr[v] & mask) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) best = static_cast<std::uint32_t>(std::popcount(mask));
  }
  return best;
}

RunTrace reference_sa(const IsingProblem& problem,
                      const AnnealSchedule& schedule, const NoiseConfig& noise,
                      std::uint64_t seed, std::uint64_t max_iter,
                      bool record_spikes, std::uint64_t trace_every) {
  noise.validate();
  if (problem.has_bias()) {
    throw std::invalid_argument(
        "reference_sa: problem has a nonzero bias; fold_bias it first");
  }
  Rng rng(seed);
  const auto& free = problem.free_indices();
  const double eps = noise.resolved_eps();
  const double shift =
      noise.dist == NoiseDist::Exponential ? noise.mean_shift() : 0.0;

  StateVector s(problem.dim(), 1);
  double energy = problem.energy(s);

  RunTrace trace;
  trace.domain = problem.domain();
  trace.dim = static_cast<std::uint32_t>(problem.dim());
  trace.initial_energy = energy;
  trace.best_state = s;
  double best = energy;
  double last_mu = 0.0;

  for (std::uint64_t n = 1; n <= max_iter; ++n) {
    const double temperature = schedule.temperature(n);
    const std::uint32_t p = free[rng.next_below(free.size())];
    double sample;
    if (noise.dist == NoiseDist::Exponential) {
      sample = exponential_noise_from_u(rng.next_u01(), noise.b, eps, shift);
    } else {
      sample = sample_threshold_noise(noise, rng);
    }
    const double mu = make_threshold(temperature, sample, 0.0, 0, noise.quant);
    last_mu = mu;
    const double dh = problem.delta_energy(s, p);
    if (-0.5 * dh > mu) {
      const bool up = s[p] != 1;
      problem.flip(s, p);
      energy += dh;
      ++trace.spike_count;
      if (record_spikes) {
        trace.spikes.push_back(
            {n, p, up ? SpikeDirection::On : SpikeDirection::Off, dh});
      }
      if (energy < best) {
        best = energy;
        trace.best_iteration = n;
        trace.best_state = s;
        trace.improvements.push_back({n, best});
      }
    }
    if (trace_every != 0 && n % trace_every == 0) {
      trace.samples.push_back({n, best, energy, last_mu});
    }
  }
  trace.iterations = max_iter;
  trace.best_energy = best;
  trace.final_energy = energy;
  trace.final_state = s;
  return trace;
}

}  // namespace neurosa

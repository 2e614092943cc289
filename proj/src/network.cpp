#include "neurosa/network.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace neurosa {

ArbiterMode arbiter_from_string(const std::string& name) {
  if (name == "select-then-test" || name == "stt") {
    return ArbiterMode::SelectThenTest;
  }
  if (name == "test-then-select" || name == "tts") {
    return ArbiterMode::TestThenSelect;
  }
  throw std::invalid_argument("unknown arbiter mode: " + name);
}

std::string to_string(ArbiterMode mode) {
  return mode == ArbiterMode::SelectThenTest ? "select-then-test"
                                             : "test-then-select";
}

Network::Network(const IsingProblem& problem, const SolverConfig& cfg,
                 const StateVector* initial)
    : problem_(problem), cfg_(cfg), rng_(cfg.seed) {
  cfg_.noise.validate();
  if (problem_.has_bias()) {
    throw std::invalid_argument(
        "network: problem has a nonzero bias; fold_bias it first");
  }
  const std::size_t d = problem_.dim();
  if (initial) {
    problem_.check_state(*initial);
    state_ = *initial;
  } else {
    state_.assign(d, 1);  // all spins up (s+ = 1, s- = 0); binary: all ones
  }
  for (std::size_t p = 0; p < d; ++p) {
    if (problem_.is_frozen(p) && state_[p] != 1) {
      throw std::invalid_argument("network: frozen variable must start at +1");
    }
  }

  noise_eps_ = cfg_.noise.resolved_eps();
  if (cfg_.noise.dist == NoiseDist::Exponential) {
    noise_shift_ = cfg_.noise.mean_shift();
  }

  if (cfg_.hardware_faithful) {
    // The A * N^B gate must dominate any membrane potential plus the widest
    // threshold the exponential source can produce.
    const double needed = problem_.max_abs_row_sum() +
                          cfg_.schedule.max_temperature() *
                              (cfg_.noise.dist == NoiseDist::Exponential
                                   ? cfg_.noise.abs_bound()
                                   : 10.0);
    if (cfg_.a <= needed) {
      throw std::invalid_argument(
          "network: RESET constant A = " + std::to_string(cfg_.a) +
          " does not dominate potentials + thresholds (need > " +
          std::to_string(needed) + ")");
    }
  }

  v_on_.resize(d);
  v_off_.resize(d);
  for (std::size_t p = 0; p < d; ++p) {
    const double field = problem_.local_field(p, state_);
    if (problem_.domain() == Domain::Spin) {
      v_on_[p] = -field;
      v_off_[p] = field;
    } else {
      const double g = 0.5 * problem_.diagonal(p) + field;
      v_on_[p] = -0.5 * g;
      v_off_[p] = 0.5 * g;
    }
    if (cfg_.hardware_faithful && !problem_.is_frozen(p)) {
      const bool up_eligible = state_[p] != 1;
      (up_eligible ? v_on_ : v_off_)[p] += cfg_.a;
    }
  }
  energy_ = problem_.energy(state_);
  best_energy_ = energy_;
  best_state_ = state_;
}

double Network::potential_on(std::size_t p) const {
  double v = v_on_[p];
  if (cfg_.hardware_faithful && !problem_.is_frozen(p) && state_[p] != 1) {
    v -= cfg_.a;
  }
  return v;
}

double Network::potential_off(std::size_t p) const {
  double v = v_off_[p];
  if (cfg_.hardware_faithful && !problem_.is_frozen(p) && state_[p] == 1) {
    v -= cfg_.a;
  }
  return v;
}

double Network::draw_noise() {
  if (cfg_.noise.dist == NoiseDist::Exponential) {
    return exponential_noise_from_u(rng_.next_u01(), cfg_.noise.b, noise_eps_,
                                    noise_shift_);
  }
  return sample_threshold_noise(cfg_.noise, rng_);
}

void Network::apply_spike(std::uint32_t p) {
  const std::int8_t old = state_[p];
  double chg;     // new value - old value
  double factor;  // potential units per coupling unit
  if (problem_.domain() == Domain::Spin) {
    chg = -2.0 * old;
    factor = 1.0;
  } else {
    chg = old == 0 ? 1.0 : -1.0;
    factor = 0.5;
  }
  const auto* c = problem_.row_cols(p);
  const auto* w = problem_.row_weights(p);
  const std::size_t m = problem_.row_size(p);
  for (std::size_t k = 0; k < m; ++k) {
    const double upd = factor * w[k] * chg;
    v_on_[c[k]] -= upd;
    v_off_[c[k]] += upd;
  }
  problem_.flip(state_, p);
}

std::optional<SpikeEvent> Network::fire(std::uint32_t p) {
  const bool up = state_[p] != 1;  // spin -1 or binary 0: ON side fires
  double v = up ? v_on_[p] : v_off_[p];
  if (cfg_.hardware_faithful) {
    // Stored eligible-side potential carries the +A partner excitation.
    (up ? v_on_ : v_off_)[p] -= cfg_.a;  // RESET by subtraction
    (up ? v_off_ : v_on_)[p] += cfg_.a;  // excite the partner
    v -= cfg_.a;
  }
  const double dh = -2.0 * v;
  apply_spike(p);
  energy_ += dh;
  if (energy_ < best_energy_) {
    best_energy_ = energy_;
    best_state_ = state_;
  }
  return SpikeEvent{iteration_ + 1, p, up ? SpikeDirection::On : SpikeDirection::Off,
                    dh};
}

std::optional<SpikeEvent> Network::step() {
  const std::uint64_t n = iteration_ + 1;
  const double temperature = cfg_.schedule.temperature(n);
  const auto& free = problem_.free_indices();
  std::optional<SpikeEvent> event;

  if (!cfg_.hardware_faithful && cfg_.arbiter == ArbiterMode::SelectThenTest) {
    const std::uint32_t p = free[rng_.next_below(free.size())];
    const double noise = draw_noise();
    const double mu = make_threshold(temperature, noise, 0.0, 0, cfg_.noise.quant);
    last_threshold_ = mu;
    const double v = state_[p] != 1 ? v_on_[p] : v_off_[p];
    if (v > mu) event = fire(p);
  } else {
    active_.clear();
    for (const std::uint32_t p : free) {
      double mu;
      if (cfg_.hardware_faithful) {
        const double noise = draw_noise();
        // eta = 0 keeps N^B pinned at 1 without consuming a draw, so the
        // stream stays aligned with the gated TestThenSelect arbiter.
        const int bern =
            cfg_.noise.eta == 0.0 ? 1 : sample_bernoulli(cfg_.noise, rng_);
        mu = make_threshold(temperature, noise, cfg_.a, bern, cfg_.noise.quant);
      } else {
        const double noise = draw_noise();
        mu = make_threshold(temperature, noise, 0.0, 0, cfg_.noise.quant);
      }
      last_threshold_ = mu;
      const double v = state_[p] != 1 ? v_on_[p] : v_off_[p];
      if (v > mu) active_.push_back(p);
    }
    // The arbiter consumes its draw even when nothing is active, keeping the
    // stream position independent of the network's firing history length.
    const std::uint64_t k =
        rng_.next_below(active_.empty() ? 1 : active_.size());
    if (!active_.empty()) event = fire(active_[k]);
  }

  iteration_ = n;
  return event;
}

RunTrace run(const IsingProblem& problem, const SolverConfig& cfg,
             const StateVector* initial) {
  Network net(problem, cfg, initial);
  RunTrace trace;
  trace.domain = problem.domain();
  trace.dim = static_cast<std::uint32_t>(problem.dim());
  trace.initial_energy = net.current_energy();
  double best = net.best_energy();

  for (std::uint64_t i = 1; i <= cfg.max_iter; ++i) {
    const auto event = net.step();
    if (event) {
      ++trace.spike_count;
      if (cfg.record_spikes) trace.spikes.push_back(*event);
      if (net.best_energy() < best) {
        best = net.best_energy();
        trace.best_iteration = i;
        trace.improvements.push_back({i, best});
      }
    }
    if (cfg.trace_every != 0 && i % cfg.trace_every == 0) {
      trace.samples.push_back(
          {i, best, net.current_energy(), net.last_threshold()});
    }
  }

  trace.iterations = cfg.max_iter;
  trace.best_energy = best;
  trace.best_state = net.best_state();
  trace.final_energy = net.current_energy();
  trace.final_state = net.state();
  return trace;
}

std::vector<RunTrace> run_parallel(const IsingProblem& problem,
                                   const SolverConfig& cfg,
                                   std::size_t replicas, std::size_t workers) {
  if (replicas == 0) throw std::invalid_argument("run_parallel: replicas >= 1");
  std::vector<RunTrace> results(replicas);
  if (workers == 0) {
    workers = std::min<std::size_t>(replicas,
                                    std::thread::hardware_concurrency());
    if (workers == 0) workers = 1;
  }
  workers = std::min(workers, replicas);

  std::atomic<std::size_t> next{0};
  auto body = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= replicas) return;
      SolverConfig local = cfg;
      // Replica 0 is the singleton run; later replicas get decorrelated
      // seeds that stay reproducible in isolation.
      local.seed = k == 0 ? cfg.seed : derive_seed(cfg.seed, k);
      results[k] = run(problem, local);
    }
  };
  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace neurosa

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "neurosa/quant.hpp"
#include "neurosa/rng.hpp"

namespace neurosa {

enum class NoiseDist { Exponential, Gaussian, Uniform };

// Threshold-noise source of the annealer.
//
// Exponential is the canonical choice: raw = log(u/B + eps) with u ~ U(0,1],
// which is a (negated, shifted) exponential r.v. bounded above by
// log(1/B + eps). A constant shift is added so the long-run mean equals
// target_mean; with B = e the raw mean is ~ -2 and the shift ~ +1.084.
// Gaussian and Uniform exist for the schedule/noise ablation and share the
// target mean (unit variance, and support width 2, respectively).
struct NoiseConfig {
  NoiseDist dist = NoiseDist::Exponential;
  double b = std::numbers::e;  // acceptance hyperparameter, > 1
  // Numerical floor inside the log. 0 selects the default for the active
  // precision: 1e-12 unquantized, the format's smallest normal otherwise
  // (the floor models what the arithmetic of the platform can resolve).
  double eps = 0.0;
  double target_mean = -0.916;
  double eta = 0.0;  // Bernoulli zero-probability: P(N^B = 0) = eta
  std::optional<QuantFormat> quant;

  double resolved_eps() const {
    if (eps > 0.0) return eps;
    if (quant && !quant->is_identity()) return quant->min_normal();
    return 1e-12;
  }

  // E[log(u/B + eps)] in closed form:
  //   B * [(1/B + eps) log(1/B + eps) - (1/B + eps) - eps log(eps) + eps]
  double raw_mean() const {
    const double e = resolved_eps();
    const double hi = 1.0 / b + e;
    const double upper = hi * std::log(hi) - hi;
    const double lower = e > 0.0 ? e * std::log(e) - e : 0.0;
    return b * (upper - lower);
  }
  double mean_shift() const { return target_mean - raw_mean(); }
  // Largest possible raw exponential sample (attained at u = 1).
  double raw_upper_bound() const { return std::log(1.0 / b + resolved_eps()); }
  // Largest |sample| the shifted exponential can produce given that u >= 2^-53.
  double abs_bound() const {
    const double e = resolved_eps();
    const double lo = std::log(0x1.0p-53 / b + e) + mean_shift();
    const double hi = raw_upper_bound() + mean_shift();
    return std::max(std::abs(lo), std::abs(hi));
  }

  void validate() const {
    if (dist == NoiseDist::Exponential) {
      if (b <= 1.0) throw std::invalid_argument("noise: B must be > 1");
      if (eps < 0.0) {
        throw std::invalid_argument("noise: eps must be > 0 (or 0 for auto)");
      }
    }
    if (eta < 0.0 || eta > 1.0) {
      throw std::invalid_argument("noise: eta must be in [0, 1]");
    }
  }
};

inline double exponential_noise_from_u(double u, double b, double eps,
                                       double shift) {
  return std::log(u / b + eps) + shift;
}

// One threshold-noise sample. Exponential: 1 uniform draw; Gaussian: 2 draws
// (Box-Muller, second value discarded); Uniform: 1 draw.
inline double sample_threshold_noise(const NoiseConfig& cfg, Rng& rng) {
  switch (cfg.dist) {
    case NoiseDist::Exponential:
      return exponential_noise_from_u(rng.next_u01(), cfg.b,
                                      cfg.resolved_eps(), cfg.mean_shift());
    case NoiseDist::Gaussian: {
      const double u1 = rng.next_u01();
      const double u2 = rng.next_u01();
      return cfg.target_mean +
             std::sqrt(-2.0 * std::log(u1)) *
                 std::cos(2.0 * std::numbers::pi * u2);
    }
    case NoiseDist::Uniform:
      return cfg.target_mean + (2.0 * rng.next_u01() - 1.0);
  }
  throw std::logic_error("sample_threshold_noise: unknown distribution");
}

// Bernoulli gate sample: 1 with probability 1 - eta, 0 with probability eta.
inline int sample_bernoulli(const NoiseConfig& cfg, Rng& rng) {
  return rng.next_u01() <= cfg.eta ? 0 : 1;
}

// Firing threshold mu = T * noise + A * bernoulli, quantized when a format
// is configured.
inline double make_threshold(double temperature, double noise, double a,
                             int bernoulli,
                             const std::optional<QuantFormat>& quant) {
  const double mu = temperature * noise + a * bernoulli;
  return quant ? quantize(mu, *quant) : mu;
}

NoiseDist noise_dist_from_string(const std::string& name);
std::string to_string(NoiseDist dist);

}  // namespace neurosa

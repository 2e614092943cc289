#include "neurosa/noise.hpp"

namespace neurosa {

NoiseDist noise_dist_from_string(const std::string& name) {
  if (name == "exponential" || name == "exp") return NoiseDist::Exponential;
  if (name == "gaussian") return NoiseDist::Gaussian;
  if (name == "uniform") return NoiseDist::Uniform;
  throw std::invalid_argument("unknown noise distribution: " + name);
}

std::string to_string(NoiseDist dist) {
  switch (dist) {
    case NoiseDist::Exponential:
      return "exponential";
    case NoiseDist::Gaussian:
      return "gaussian";
    case NoiseDist::Uniform:
      return "uniform";
  }
  return "?";
}

}  // namespace neurosa

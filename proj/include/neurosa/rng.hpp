#pragma once

#include <cstdint>
#include <random>

namespace neurosa {

// Stateless 64-bit mixer (splitmix64 finalizer).
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for replica k, derived so replicas are decorrelated and reproducible
// independently of how many workers execute them.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t replica) {
  return mix64(mix64(base) ^ mix64(replica + 1));
}

// mt19937_64 with explicit draw helpers. The C++ standard pins the engine's
// output sequence, so runs are reproducible across platforms; the helpers
// below replace the std:: distribution wrappers, whose mapping from engine
// output to values is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on (0, 1]; never 0, so log(u) stays finite.
  double next_u01() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, n) via multiply-shift.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  bool operator==(const Rng&) const = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace neurosa

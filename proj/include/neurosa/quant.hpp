#pragma once

#include <cmath>
#include <stdexcept>

namespace neurosa {

// Minifloat format: 1 sign bit + exponent_bits + mantissa_bits, IEEE-style
// bias and subnormals, round-to-nearest-even, saturating at the largest
// finite value. total bits 64 means "identity" (no quantization).
struct QuantFormat {
  int exponent_bits = 11;
  int mantissa_bits = 52;

  static QuantFormat from_total_bits(int bits) {
    switch (bits) {
      case 8:
        return {5, 2};
      case 16:
        return {5, 10};
      case 32:
        return {8, 23};
      case 64:
        return {11, 52};
      default:
        throw std::invalid_argument("quantization width must be 8/16/32/64");
    }
  }

  int total_bits() const { return 1 + exponent_bits + mantissa_bits; }
  bool is_identity() const { return total_bits() >= 64; }
  int bias() const { return (1 << (exponent_bits - 1)) - 1; }
  // Smallest positive normal value of the format.
  double min_normal() const { return std::ldexp(1.0, 1 - bias()); }
  double max_finite() const {
    return (2.0 - std::ldexp(1.0, -mantissa_bits)) * std::ldexp(1.0, bias());
  }
};

// Rounds x to the format grid. Monotone and idempotent.
inline double quantize(double x, const QuantFormat& fmt) {
  if (fmt.is_identity() || x == 0.0 || !std::isfinite(x)) return x;
  const int emin = 1 - fmt.bias();
  int e = std::ilogb(x);
  if (e < emin) e = emin;  // subnormal range shares the e=emin quantum
  const int quantum_exp = e - fmt.mantissa_bits;
  const double scaled = std::ldexp(x, -quantum_exp);
  const double rounded = std::nearbyint(scaled);  // RNE under default mode
  double q = std::ldexp(rounded, quantum_exp);
  const double mx = fmt.max_finite();
  if (q > mx) q = mx;
  if (q < -mx) q = -mx;
  return q;
}

}  // namespace neurosa

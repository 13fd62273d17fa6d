#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace ncqm {

// Seeded generator for reproducible reports: mt19937_64 bits mapped to
// [0, 1) doubles directly, so streams are identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return double(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::complex<double> complex_box(double half_width = 1.0) {
    const double re = uniform(-half_width, half_width);
    const double im = uniform(-half_width, half_width);
    return {re, im};
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace ncqm

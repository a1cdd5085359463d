#pragma once

// Reproducible random X states.
//
// Generator: 64-bit LCG, state <- state * 6364136223846793005 +
// 1442695040888963407 (mod 2^64), seeded with state = seed. A uniform double
// in [0, 1) is the top 53 bits of the updated state times 2^-53.
//
// X state: (a, b, c, d) uniform on the simplex via normalised exponential
// spacings e_k = -ln(1 - u_k), then z uniform on [-sqrt(bc), sqrt(bc)] and w
// uniform on [-sqrt(ad), sqrt(ad)], drawn in that order.

#include <cstdint>

#include "qcorr/core.hpp"

namespace qcorr {

class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

XState random_x_state(Lcg64& rng);
// b = c forced by averaging the sampled pair.
XState random_symmetric_x_state(Lcg64& rng);
// a = d forced the same way.
XState random_antisymmetric_x_state(Lcg64& rng);

}  // namespace qcorr

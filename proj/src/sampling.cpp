#include "qcorr/sampling.hpp"

#include <array>
#include <cmath>

namespace qcorr {

namespace {

enum class Tie { kNone, kInner, kOuter };

XState sample(Lcg64& rng, Tie tie) {
  std::array<double, 4> e;
  double total = 0.0;
  for (double& x : e) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  double a = e[0] / total, b = e[1] / total, c = e[2] / total, d = e[3] / total;
  if (tie == Tie::kInner) b = c = 0.5 * (b + c);
  if (tie == Tie::kOuter) a = d = 0.5 * (a + d);
  const double z = rng.uniform(-1.0, 1.0) * std::sqrt(b * c);
  const double w = rng.uniform(-1.0, 1.0) * std::sqrt(a * d);
  return XState::make(a, b, c, z, w);
}

}  // namespace

XState random_x_state(Lcg64& rng) { return sample(rng, Tie::kNone); }
XState random_symmetric_x_state(Lcg64& rng) { return sample(rng, Tie::kInner); }
XState random_antisymmetric_x_state(Lcg64& rng) { return sample(rng, Tie::kOuter); }

}  // namespace qcorr

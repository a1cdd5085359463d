#include "qcorr/entropy.hpp"

#include <cmath>

namespace qcorr {

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double entropy_bits(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) h -= xlog2x(p);
  return h;
}

double binary_entropy(double q) { return -xlog2x(q) - xlog2x(1.0 - q); }

}  // namespace qcorr

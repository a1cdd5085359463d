#pragma once

#include <span>

namespace qcorr {

// p * log2(p), with the 0 log 0 = 0 convention. Non-positive p contributes 0.
double xlog2x(double p);

// Shannon entropy in bits of a list of probabilities (or eigenvalues).
// Entries <= 0 are ignored, so zero padding and tiny negative round-off are
// harmless.
double entropy_bits(std::span<const double> probabilities);

// h(q) = -q log2 q - (1-q) log2 (1-q).
double binary_entropy(double q);

}  // namespace qcorr

#pragma once

// Local Kraus channels on two qubits, the Werner family, and closed forms for
// Werner states under amplitude damping on subsystem B.

#include <string>
#include <vector>

#include "qcorr/core.hpp"

namespace qcorr {

class KrausChannel {
 public:
  // Throws std::invalid_argument unless sum_k E_k^dagger E_k = 1 within
  // kStateTolerance.
  KrausChannel(std::vector<Matrix2> operators, std::string label);

  const std::vector<Matrix2>& operators() const { return ops_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<Matrix2> ops_;
  std::string label_;
};

KrausChannel identity_channel();
// E0 = diag(1, sqrt(1-p)), E1 = sqrt(p) |0><1|. p in [0, 1].
KrausChannel amplitude_damping(double p);

DensityMatrix apply_local_b(const DensityMatrix& m, const KrausChannel& ch);
DensityMatrix apply_local_a(const DensityMatrix& m, const KrausChannel& ch);
// sum_ij (K_i (x) K_j) rho (K_i (x) K_j)^dagger
DensityMatrix apply_product(const DensityMatrix& m, const KrausChannel& on_a,
                            const KrausChannel& on_b);

// z |Psi-><Psi-| + (1 - z)/4 * 1, z in [0, 1].
XState werner(double z);

struct DampingParams {
  double z = 0.0;  // Werner mixing
  double p = 0.0;  // damping probability

  // Throws std::invalid_argument outside the unit square.
  static DampingParams make(double z, double p);
};

BlochX werner_ad_bloch(const DampingParams& dp);
// Bloch parameters after amplitude damping with parameter p on B.
BlochX evolve_x_bloch_ad(const BlochX& v, double p);
// Same map on (a, b, c, z, w): |x1> populations decay into |x0>. Exact
// identity at p = 0.
XState evolve_x_ad(const XState& s, double p);

double laqc_werner_ad(const DampingParams& dp);
// Concurrence in the prefactor-1/2 normalisation of concurrence_x.
double concurrence_werner_ad(const DampingParams& dp);

// MCDM discord of the damped Werner state written out in (z, p):
//   S(rho_B) - S(rho) + N1,  N1 = 1 - g(z sqrt(1-p)).
double discord_werner_ad(const DampingParams& dp);

// Diagnostics for the discrepancy report only. The published Werner-AD
// discord formula as printed: the p = 0 Werner spectrum in place of S(rho),
// no constant term from S(rho_B), and N1 carrying +arctanh. Diverges as
// z sqrt(1-p) -> 1.
double n1_werner_printed(const DampingParams& dp);
double discord_werner_ad_printed(const DampingParams& dp);

// D_B - L for the damped Werner state.
double surface_s(const DampingParams& dp);

}  // namespace qcorr

#include "qcorr/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcorr/correlations.hpp"
#include "qcorr/entropy.hpp"

namespace qcorr {

namespace {

void require_unit(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

Matrix4 conjugate_sum(const Matrix4& rho, const std::vector<Matrix4>& kraus) {
  Matrix4 out = Matrix4::Zero();
  for (const Matrix4& k : kraus) out += k * rho * k.adjoint();
  return out;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix2> operators, std::string label)
    : ops_(std::move(operators)), label_(std::move(label)) {
  Matrix2 sum = Matrix2::Zero();
  for (const Matrix2& e : ops_) sum += e.adjoint() * e;
  const double defect = (sum - Matrix2::Identity()).cwiseAbs().maxCoeff();
  if (defect > kStateTolerance)
    throw std::invalid_argument("Kraus operators of '" + label_ +
                                "' are not trace preserving");
}

KrausChannel identity_channel() { return KrausChannel({Matrix2::Identity()}, "identity"); }

KrausChannel amplitude_damping(double p) {
  require_unit("amplitude damping parameter p", p);
  Matrix2 e0 = Matrix2::Zero(), e1 = Matrix2::Zero();
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - p);
  e1(0, 1) = std::sqrt(p);
  return KrausChannel({e0, e1}, "amplitude damping");
}

DensityMatrix apply_local_b(const DensityMatrix& m, const KrausChannel& ch) {
  std::vector<Matrix4> kraus;
  for (const Matrix2& e : ch.operators()) kraus.push_back(kron(Matrix2::Identity(), e));
  return DensityMatrix(conjugate_sum(m.matrix(), kraus));
}

DensityMatrix apply_local_a(const DensityMatrix& m, const KrausChannel& ch) {
  std::vector<Matrix4> kraus;
  for (const Matrix2& e : ch.operators()) kraus.push_back(kron(e, Matrix2::Identity()));
  return DensityMatrix(conjugate_sum(m.matrix(), kraus));
}

DensityMatrix apply_product(const DensityMatrix& m, const KrausChannel& on_a,
                            const KrausChannel& on_b) {
  std::vector<Matrix4> kraus;
  for (const Matrix2& ka : on_a.operators())
    for (const Matrix2& kb : on_b.operators()) kraus.push_back(kron(ka, kb));
  return DensityMatrix(conjugate_sum(m.matrix(), kraus));
}

XState werner(double z) {
  require_unit("Werner parameter z", z);
  return XState::make((1.0 - z) / 4.0, (1.0 + z) / 4.0, (1.0 + z) / 4.0, -z / 2.0, 0.0);
}

DampingParams DampingParams::make(double z, double p) {
  require_unit("Werner parameter z", z);
  require_unit("damping parameter p", p);
  return {z, p};
}

BlochX werner_ad_bloch(const DampingParams& dp) {
  const double damp = std::sqrt(1.0 - dp.p);
  return BlochX{.x3 = 0.0,
                .y3 = dp.p,
                .t1 = -damp * dp.z,
                .t2 = -damp * dp.z,
                .t3 = -(1.0 - dp.p) * dp.z};
}

BlochX evolve_x_bloch_ad(const BlochX& v, double p) {
  require_unit("damping parameter p", p);
  const double damp = std::sqrt(1.0 - p);
  return BlochX{.x3 = v.x3,
                .y3 = (1.0 - p) * v.y3 + p,
                .t1 = damp * v.t1,
                .t2 = damp * v.t2,
                .t3 = (1.0 - p) * v.t3 + p * v.x3};
}

XState evolve_x_ad(const XState& s, double p) {
  require_unit("damping parameter p", p);
  const double damp = std::sqrt(1.0 - p);
  return XState::make(s.a() + p * s.b(), (1.0 - p) * s.b(), s.c() + p * s.d(),
                      damp * s.z(), damp * s.w());
}

double laqc_werner_ad(const DampingParams& dp) {
  return g_j(-std::sqrt(1.0 - dp.p) * dp.z);
}

double concurrence_werner_ad(const DampingParams& dp) {
  const double z = dp.z, p = dp.p;
  const double c1 =
      0.25 * (2.0 * z * std::sqrt(1.0 - p) -
              std::sqrt((1.0 - p) * (1.0 - z) * (1.0 + p - z * (1.0 - p))));
  return std::max(0.0, c1);
}

double discord_werner_ad(const DampingParams& dp) {
  const double z = dp.z, p = dp.p;
  const double s_b = 1.0 - 0.5 * (xlog2x(1.0 - p) + xlog2x(1.0 + p));

  const double radius = 0.25 * std::sqrt(p * p + 4.0 * (1.0 - p) * z * z);
  const double mean = 0.25 * (1.0 + (1.0 - p) * z);
  const std::array<double, 4> eigenvalues{
      0.25 * (1.0 + p - (1.0 - p) * z),
      0.25 * (1.0 - p) * (1.0 - z),
      mean + radius,
      mean - radius,
  };
  const double n1 = 1.0 - g_j(z * std::sqrt(1.0 - p));
  return s_b - entropy_bits(eigenvalues) + n1;
}

double n1_werner_printed(const DampingParams& dp) {
  const double r = dp.z * std::sqrt(1.0 - dp.p);
  return 1.0 - 0.5 * std::log2((dp.p - 1.0) * dp.z * dp.z + 1.0) +
         r / std::numbers::ln2 * std::atanh(r);
}

double discord_werner_ad_printed(const DampingParams& dp) {
  const double z = dp.z, p = dp.p;
  return 3.0 * xlog2x((1.0 - z) / 4.0) + xlog2x((1.0 + 3.0 * z) / 4.0) -
         0.5 * xlog2x(1.0 - p) - 0.5 * xlog2x(1.0 + p) + n1_werner_printed(dp);
}

double surface_s(const DampingParams& dp) {
  return discord_werner_ad(dp) - laqc_werner_ad(dp);
}

}  // namespace qcorr

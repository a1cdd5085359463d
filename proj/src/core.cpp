#include "qcorr/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qcorr/entropy.hpp"

namespace qcorr {

namespace {

[[noreturn]] void violation(const std::string& constraint, double lhs,
                            double rhs) {
  std::ostringstream os;
  os.precision(12);
  os << "constraint " << constraint << " violated (" << lhs << " vs " << rhs
     << ")";
  throw StateError(os.str());
}

double clamp_population(const char* name, double value) {
  if (!std::isfinite(value)) violation(std::string(name) + " finite", value, 0.0);
  if (value < -kStateTolerance) violation(std::string(name) + " >= 0", value, 0.0);
  return std::max(value, 0.0);
}

}  // namespace

XState XState::make(double a, double b, double c, double z, double w) {
  if (!std::isfinite(z) || !std::isfinite(w))
    throw StateError("constraint z, w finite violated");
  a = clamp_population("a", a);
  b = clamp_population("b", b);
  c = clamp_population("c", c);
  const double d = 1.0 - (a + b + c);
  if (d < -kStateTolerance) violation("d = 1-(a+b+c) >= 0", d, 0.0);

  const double zmax = std::sqrt(b * c);
  if (std::abs(z) > zmax + kStateTolerance) violation("|z| <= sqrt(b*c)", std::abs(z), zmax);
  const double wmax = std::sqrt(a * std::max(d, 0.0));
  if (std::abs(w) > wmax + kStateTolerance) violation("|w| <= sqrt(a*d)", std::abs(w), wmax);
  return XState(a, b, c, z, w);
}

double XState::d() const { return std::max(0.0, 1.0 - (a_ + b_ + c_)); }

BlochX bloch_from_x(const XState& s) {
  const double a = s.a(), b = s.b(), c = s.c(), d = s.d();
  return BlochX{
      .x3 = a + b - c - d,
      .y3 = a - b + c - d,
      .t1 = 2.0 * (s.z() + s.w()),
      .t2 = 2.0 * (s.z() - s.w()),
      .t3 = a - b - c + d,
  };
}

XState x_from_bloch(const BlochX& v) {
  return XState::make((1.0 + v.x3 + v.y3 + v.t3) / 4.0,
                      (1.0 + v.x3 - v.y3 - v.t3) / 4.0,
                      (1.0 - v.x3 + v.y3 - v.t3) / 4.0,
                      (v.t1 + v.t2) / 4.0,
                      (v.t1 - v.t2) / 4.0);
}

DensityMatrix::DensityMatrix(const Matrix4& m) : m_(m) {
  const double herm = hermiticity_defect(m);
  if (herm > kStateTolerance) violation("rho = rho^dagger", herm, kStateTolerance);
  const cd tr = m.trace();
  if (std::abs(tr - 1.0) > kStateTolerance) violation("Tr rho = 1", tr.real(), 1.0);
  const auto eig = jacobi_eigh<4>(m);
  if (eig.values[3] < -kPositivityTolerance) violation("rho >= 0", eig.values[3], 0.0);
}

QubitDensity::QubitDensity(const Matrix2& m) : m_(m) {
  const double herm = hermiticity_defect(m);
  if (herm > kStateTolerance) violation("rho = rho^dagger", herm, kStateTolerance);
  const cd tr = m.trace();
  if (std::abs(tr - 1.0) > kStateTolerance) violation("Tr rho = 1", tr.real(), 1.0);
  const auto eig = eigh2_values(m);
  if (eig[1] < -kPositivityTolerance) violation("rho >= 0", eig[1], 0.0);
}

DensityMatrix to_dense(const XState& s) {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = s.a();
  m(1, 1) = s.b();
  m(2, 2) = s.c();
  m(3, 3) = s.d();
  m(1, 2) = m(2, 1) = s.z();
  m(0, 3) = m(3, 0) = s.w();
  return DensityMatrix(m);
}

FanoParams fano_from_dense(const DensityMatrix& m) {
  const Matrix4& rho = m.matrix();
  auto expect = [&](const Matrix2& left, const Matrix2& right) {
    return (rho * kron(left, right)).trace().real();
  };
  FanoParams f;
  for (int i = 0; i < 3; ++i) {
    const Matrix2& si = pauli::by_index(i + 1);
    f.x[i] = expect(si, pauli::identity());
    f.y[i] = expect(pauli::identity(), si);
    for (int j = 0; j < 3; ++j) f.t[i][j] = expect(si, pauli::by_index(j + 1));
  }
  return f;
}

QubitDensity reduced_a(const DensityMatrix& m) {
  Matrix2 r = Matrix2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(i, j) += m(2 * i + k, 2 * j + k);
  return QubitDensity(r);
}

QubitDensity reduced_b(const DensityMatrix& m) {
  Matrix2 r = Matrix2::Zero();
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int i = 0; i < 2; ++i) r(k, l) += m(2 * i + k, 2 * i + l);
  return QubitDensity(r);
}

Spectrum::Spectrum(const std::array<double, 4>& values) : values_(values) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
  if (values_[3] < -kPositivityTolerance) violation("eigenvalues >= 0", values_[3], 0.0);
  const double sum = values_[0] + values_[1] + values_[2] + values_[3];
  if (std::abs(sum - 1.0) > kPositivityTolerance) violation("sum of eigenvalues = 1", sum, 1.0);
}

Spectrum x_spectrum(const XState& s) {
  auto block = [](double p, double q, double coherence) {
    const double mean = 0.5 * (p + q);
    const double radius = std::hypot(0.5 * (p - q), coherence);
    return std::array<double, 2>{mean + radius, mean - radius};
  };
  const auto outer = block(s.a(), s.d(), s.w());
  const auto inner = block(s.b(), s.c(), s.z());
  return Spectrum({outer[0], outer[1], inner[0], inner[1]});
}

Spectrum spectrum(const DensityMatrix& m) {
  return Spectrum(jacobi_eigh<4>(m.matrix()).values);
}

double von_neumann_entropy(const Spectrum& sp) { return entropy_bits(sp.values()); }

double von_neumann_entropy(const QubitDensity& m) {
  const auto ev = eigh2_values(m.matrix());
  return entropy_bits(ev);
}

double mutual_information(const DensityMatrix& m) {
  return von_neumann_entropy(reduced_a(m)) + von_neumann_entropy(reduced_b(m)) -
         von_neumann_entropy(spectrum(m));
}

}  // namespace qcorr

#pragma once

// State representations for two qubits: canonical X states in population /
// coherence form and in Bloch form, generic 4x4 density matrices, and their
// spectra.
//
// Basis ordering is |00>, |01>, |10>, |11> with subsystem A as the left
// tensor factor.

#include <array>
#include <stdexcept>
#include <string>

#include "qcorr/linalg.hpp"

namespace qcorr {

// Absolute tolerance for trace, Hermiticity and the X-state parameter
// constraints.
inline constexpr double kStateTolerance = 1e-12;
// Eigenvalues down to -kPositivityTolerance are accepted as zero.
inline constexpr double kPositivityTolerance = 1e-10;

// Raised when a state violates one of its defining constraints. what() names
// the constraint.
class StateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical X state
//
//   | a 0 0 w |
//   | 0 b z 0 |
//   | 0 z c 0 |
//   | w 0 0 d |
//
// with real entries. d = 1 - (a + b + c) is derived on every access.
class XState {
 public:
  // Validates a, b, c, d >= 0, |z| <= sqrt(bc), |w| <= sqrt(ad). Round-off
  // below kStateTolerance is clamped.
  static XState make(double a, double b, double c, double z, double w);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const;
  double z() const { return z_; }
  double w() const { return w_; }

 private:
  XState(double a, double b, double c, double z, double w)
      : a_(a), b_(b), c_(c), z_(z), w_(w) {}

  double a_, b_, c_, z_, w_;
};

inline XState make_x_state(double a, double b, double c, double z, double w) {
  return XState::make(a, b, c, z, w);
}

// Non-zero Fano components of an X state: rho = (1 + x3 s3(x)1 + y3 1(x)s3 +
// sum_n t_n s_n(x)s_n) / 4.
struct BlochX {
  double x3 = 0.0;
  double y3 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
};

BlochX bloch_from_x(const XState& s);
// Throws StateError when the reconstructed matrix is not a state.
XState x_from_bloch(const BlochX& v);

// General two-qubit density matrix. Construction checks Hermiticity, unit
// trace and positivity (Jacobi eigenvalues >= -kPositivityTolerance).
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix4& m);

  const Matrix4& matrix() const { return m_; }
  cd operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix4 m_;
};

// Single-qubit density matrix, validated like DensityMatrix.
class QubitDensity {
 public:
  explicit QubitDensity(const Matrix2& m);

  const Matrix2& matrix() const { return m_; }
  cd operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix2 m_;
};

DensityMatrix to_dense(const XState& s);

// Full Fano-Bloch parameters x_i = Tr[rho s_i(x)1], y_i = Tr[rho 1(x)s_i],
// T_ij = Tr[rho s_i(x)s_j]. Index 0 is the x component.
struct FanoParams {
  std::array<double, 3> x{};
  std::array<double, 3> y{};
  std::array<std::array<double, 3>, 3> t{};
};

FanoParams fano_from_dense(const DensityMatrix& m);

QubitDensity reduced_a(const DensityMatrix& m);
QubitDensity reduced_b(const DensityMatrix& m);

// Four eigenvalues in descending order, nonnegative within
// kPositivityTolerance and summing to one.
class Spectrum {
 public:
  explicit Spectrum(const std::array<double, 4>& values);

  const std::array<double, 4>& values() const { return values_; }
  double operator[](int i) const { return values_[i]; }

 private:
  std::array<double, 4> values_;
};

// Analytic block diagonalisation of an X state.
Spectrum x_spectrum(const XState& s);
// Jacobi diagonalisation of a generic state.
Spectrum spectrum(const DensityMatrix& m);

double von_neumann_entropy(const Spectrum& sp);
double von_neumann_entropy(const QubitDensity& m);

// S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_information(const DensityMatrix& m);

}  // namespace qcorr

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace qcorr {

using cd = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector2 = Eigen::Vector2cd;
using Vector4 = Eigen::Vector4cd;

namespace pauli {
// sigma_0 .. sigma_3, standard representation.
const Matrix2& identity();
const Matrix2& x();
const Matrix2& y();
const Matrix2& z();
// index 0 is the identity, 1..3 the Pauli matrices
const Matrix2& by_index(int i);
}  // namespace pauli

// Tensor product a (x) b of two qubit operators; a acts on the left factor.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

template <int N>
struct HermitianEigen {
  std::array<double, N> values;        // descending
  Eigen::Matrix<cd, N, N> vectors;     // column k belongs to values[k]
  int sweeps = 0;
};

// Cyclic complex Jacobi diagonalisation. The input is assumed Hermitian; only
// the upper triangle is read when forming each rotation.
template <int N>
HermitianEigen<N> jacobi_eigh(const Eigen::Matrix<cd, N, N>& a,
                              int max_sweeps = 100);

extern template HermitianEigen<2> jacobi_eigh<2>(const Matrix2&, int);
extern template HermitianEigen<4> jacobi_eigh<4>(const Matrix4&, int);

// Largest |m - m^dagger| entry.
template <int N>
double hermiticity_defect(const Eigen::Matrix<cd, N, N>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Closed-form eigenvalues of a 2x2 Hermitian matrix, descending.
std::array<double, 2> eigh2_values(const Matrix2& m);

}  // namespace qcorr

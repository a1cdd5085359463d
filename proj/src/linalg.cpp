#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcorr {

namespace pauli {
namespace {
Matrix2 make(cd a, cd b, cd c, cd d) {
  Matrix2 m;
  m << a, b, c, d;
  return m;
}
}  // namespace

const Matrix2& identity() {
  static const Matrix2 m = make(1.0, 0.0, 0.0, 1.0);
  return m;
}
const Matrix2& x() {
  static const Matrix2 m = make(0.0, 1.0, 1.0, 0.0);
  return m;
}
const Matrix2& y() {
  static const Matrix2 m = make(0.0, cd(0.0, -1.0), cd(0.0, 1.0), 0.0);
  return m;
}
const Matrix2& z() {
  static const Matrix2 m = make(1.0, 0.0, 0.0, -1.0);
  return m;
}
const Matrix2& by_index(int i) {
  switch (i) {
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: return identity();
  }
}
}  // namespace pauli

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

template <int N>
HermitianEigen<N> jacobi_eigh(const Eigen::Matrix<cd, N, N>& input,
                              int max_sweeps) {
  using Mat = Eigen::Matrix<cd, N, N>;
  Mat a = input;
  Mat v = Mat::Identity();
  const double scale = std::max(input.norm(), 1e-300);

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) off += std::norm(a(p, q));
    if (off <= 1e-34 * scale * scale) break;

    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        const cd phase = std::conj(a(p, q)) / r;  // e^{-i arg a_pq}
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Mat g = Mat::Identity();
        g(p, p) = c;
        g(p, q) = s;
        g(q, p) = -s * phase;
        g(q, q) = c * phase;
        a = (g.adjoint() * a * g).eval();
        v = (v * g).eval();
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::array<int, N> order;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() > a(j, j).real();
  });

  HermitianEigen<N> out;
  out.sweeps = sweep;
  for (int k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

template HermitianEigen<2> jacobi_eigh<2>(const Matrix2&, int);
template HermitianEigen<4> jacobi_eigh<4>(const Matrix4&, int);

std::array<double, 2> eigh2_values(const Matrix2& m) {
  const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
  const double half_gap = 0.5 * (m(0, 0).real() - m(1, 1).real());
  const double radius = std::hypot(half_gap, std::abs(m(0, 1)));
  return {mean + radius, mean - radius};
}

}  // namespace qcorr

#include "qcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

#include "qcorr/entropy.hpp"

namespace qcorr {

namespace {

// num * log2(num / den) with 0 log 0 = 0.
double weighted_log(double num, double den) {
  return num > 0.0 ? num * std::log2(num / den) : 0.0;
}

}  // namespace

const char* to_string(XSymmetry kind) {
  switch (kind) {
    case XSymmetry::kSymmetric: return "symmetric";
    case XSymmetry::kAntiSymmetric: return "anti-symmetric";
    case XSymmetry::kAsymmetric: break;
  }
  return "asymmetric";
}

XClass classify(const XState& s, double tol) {
  XClass out{XSymmetry::kAsymmetric, tol};
  if (std::abs(s.b() - s.c()) <= tol)
    out.kind = XSymmetry::kSymmetric;
  else if (std::abs(s.a() - s.d()) <= tol)
    out.kind = XSymmetry::kAntiSymmetric;
  return out;
}

double g_j(double t) { return 0.5 * (xlog2x(1.0 + t) + xlog2x(1.0 - t)); }

double g_pm(double x3, double t3, GBranch branch) {
  if (std::abs(x3) >= 1.0)
    throw std::domain_error("g_pm: |x3| = 1 makes the marginal denominators vanish");
  const double sign = branch == GBranch::kPlus ? 1.0 : -1.0;
  const double diag_hi = 1.0 + sign * t3 + 2.0 * x3;
  const double diag_lo = 1.0 + sign * t3 - 2.0 * x3;
  const double cross = 1.0 - sign * t3;
  if (std::min({diag_hi, diag_lo, cross}) < -kStateTolerance)
    throw std::domain_error("g_pm: arguments do not describe a probability table");
  return weighted_log(diag_hi, (1.0 + x3) * (1.0 + x3)) / 4.0 +
         weighted_log(diag_lo, (1.0 - x3) * (1.0 - x3)) / 4.0 +
         weighted_log(cross, 1.0 - x3 * x3) / 2.0;
}

double laqc_asymmetric(const BlochX& v) { return g_j(v.t2); }

double laqc(const XState& s, double tol) {
  const BlochX v = bloch_from_x(s);
  const XClass cls = classify(s, tol);
  if (cls.kind == XSymmetry::kAsymmetric) return laqc_asymmetric(v);

  double best = std::max(g_j(v.t1), g_j(v.t2));
  // |x3| = 1 only for the pure product |00> or |11>, whose z-basis mutual
  // information is zero.
  if (std::abs(v.x3) < 1.0) {
    const GBranch branch =
        cls.kind == XSymmetry::kSymmetric ? GBranch::kPlus : GBranch::kMinus;
    best = std::max(best, g_pm(v.x3, v.t3, branch));
  }
  return best;
}

double classical_correlations_asymmetric(const XState& s, double tol) {
  const XClass cls = classify(s, tol);
  if (cls.kind != XSymmetry::kAsymmetric)
    throw std::invalid_argument(
        std::string("classical_correlations_asymmetric: state is ") +
        to_string(cls.kind));
  return 0.0;
}

double concurrence_x(const XState& s) {
  const double c1 = 2.0 * (std::abs(s.w()) - std::sqrt(s.b() * s.c()));
  const double c2 = 2.0 * (std::abs(s.z()) - std::sqrt(s.a() * s.d()));
  return 0.5 * std::max({0.0, c1, c2});
}

double concurrence_wootters(const DensityMatrix& m) {
  const Matrix4& rho = m.matrix();
  const Matrix4 flip = kron(pauli::y(), pauli::y());
  const Matrix4 tilde = flip * rho.conjugate() * flip;
  Eigen::ComplexEigenSolver<Matrix4> solver(rho * tilde, false);
  std::array<double, 4> lambda;
  for (int i = 0; i < 4; ++i)
    lambda[i] = std::sqrt(std::max(solver.eigenvalues()(i).real(), 0.0));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double n1(double x3, double t1) {
  const double r = std::min(std::hypot(x3, t1), 1.0);
  return 1.0 - g_j(r);
}

double n2(double a, double b, double c, double d) {
  return -weighted_log(a, a + c) - weighted_log(b, b + d) -
         weighted_log(c, a + c) - weighted_log(d, b + d);
}

double discord_b_mcdm(const XState& s) {
  const BlochX v = bloch_from_x(s);
  const double s_b = binary_entropy(0.5 * (1.0 + v.y3));
  const double s_ab = von_neumann_entropy(x_spectrum(s));
  // The x-type measurement direction follows the larger transverse
  // correlation, |T1| after z, w are made nonnegative by local phases.
  const double t = std::max(std::abs(v.t1), std::abs(v.t2));
  const double n = std::min(n1(v.x3, t), n2(s.a(), s.b(), s.c(), s.d()));
  return s_b - s_ab + n;
}

CorrelationReport report(const XState& s, double tol) {
  CorrelationReport r;
  r.xclass = classify(s, tol);
  r.laqc = laqc(s, tol);
  if (r.xclass.kind == XSymmetry::kAsymmetric)
    r.classical = classical_correlations_asymmetric(s, tol);
  r.discord_b = discord_b_mcdm(s);
  r.concurrence_x = concurrence_x(s);
  r.concurrence_wootters = concurrence_wootters(to_dense(s));
  return r;
}

}  // namespace qcorr

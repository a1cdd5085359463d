#pragma once

// Closed-form correlation quantifiers for canonical X states. All values are
// in bits except the two concurrences.

#include <optional>
#include <stdexcept>

#include "qcorr/core.hpp"

namespace qcorr {

inline constexpr double kDefaultClassTolerance = 1e-9;

enum class XSymmetry { kAsymmetric, kSymmetric, kAntiSymmetric };

struct XClass {
  XSymmetry kind = XSymmetry::kAsymmetric;
  double tolerance = kDefaultClassTolerance;
};

const char* to_string(XSymmetry kind);

// Symmetric when |b - c| <= tol, anti-symmetric when |a - d| <= tol,
// asymmetric otherwise. States satisfying both are reported as symmetric.
XClass classify(const XState& s, double tol = kDefaultClassTolerance);

// g(t) = (1+t)/2 log2(1+t) + (1-t)/2 log2(1-t), |t| <= 1.
double g_j(double t);

enum class GBranch { kPlus, kMinus };

// Mutual information of the computational-basis outcomes of a symmetric (+)
// or anti-symmetric (-) X state with local Bloch component x3 and T3.
// Throws std::domain_error when |x3| = 1 or a probability numerator is
// negative.
double g_pm(double x3, double t3, GBranch branch);

// LAQC of an asymmetric X state: g_j(T2).
double laqc_asymmetric(const BlochX& v);

// Dispatches on classify(): asymmetric -> g(T2); symmetric ->
// max(g(T1), g(T2), g+); anti-symmetric -> max(g(T1), g(T2), g-).
double laqc(const XState& s, double tol = kDefaultClassTolerance);

// Classical correlations of an asymmetric X state, which vanish identically.
// Throws std::invalid_argument for symmetric and anti-symmetric states.
double classical_correlations_asymmetric(const XState& s,
                                         double tol = kDefaultClassTolerance);

// max{0, |w| - sqrt(bc), |z| - sqrt(ad)}: the X-state formula with its
// prefactor 1/2, i.e. half the Wootters value.
double concurrence_x(const XState& s);

// Wootters concurrence max{0, l1 - l2 - l3 - l4} from the eigenvalues of
// rho * rho~, rho~ = (sy (x) sy) rho* (sy (x) sy).
double concurrence_wootters(const DensityMatrix& m);

// Binary entropy of (1 + r)/2 with r = sqrt(x3^2 + t1^2).
double n1(double x3, double t1);
// Conditional entropy of A after measuring B in its computational basis.
double n2(double a, double b, double c, double d);

// MCDM approximation of the B-side discord,
// S(rho_B) - S(rho) + min{N1, N2}.
double discord_b_mcdm(const XState& s);

struct CorrelationReport {
  double laqc = 0.0;
  // Only available in closed form for asymmetric states.
  std::optional<double> classical;
  double discord_b = 0.0;  // MCDM approximation
  double concurrence_x = 0.0;
  double concurrence_wootters = 0.0;
  XClass xclass;
};

CorrelationReport report(const XState& s, double tol = kDefaultClassTolerance);

}  // namespace qcorr

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/oracle.hpp"
#include "qcorr/sampling.hpp"

namespace qcorr::oracle {
namespace {

constexpr double kPi = std::numbers::pi;

MeasurementBasis random_basis(Lcg64& rng) {
  return {rng.uniform(0, kPi), rng.uniform(0, 2 * kPi), rng.uniform(0, kPi),
          rng.uniform(0, 2 * kPi)};
}

Matrix2 random_unitary(Lcg64& rng) {
  const double a = rng.uniform(0, 2 * kPi), b = rng.uniform(0, 2 * kPi);
  const double c = rng.uniform(0, 2 * kPi);
  Matrix2 u;
  u << std::polar(1.0, a) * std::cos(c), std::polar(1.0, b) * std::sin(c),
      -std::polar(1.0, -b) * std::sin(c), std::polar(1.0, -a) * std::cos(c);
  return u;
}

TEST(Basis, CanonicalFolding) {
  const MeasurementBasis b = MeasurementBasis{1.5 * kPi, 0.25, -0.5 * kPi, -0.1}.canonical();
  EXPECT_NEAR(b.theta1, 0.5 * kPi, 1e-15);
  EXPECT_NEAR(b.phi1, 0.25 + kPi, 1e-15);
  EXPECT_NEAR(b.theta2, 0.5 * kPi, 1e-15);
  EXPECT_NEAR(b.phi2, kPi - 0.1, 1e-14);
  // Folded angles give the same projectors.
  Lcg64 rng(2);
  const DensityMatrix m = to_dense(random_x_state(rng));
  const MeasurementBasis raw{4.0, 7.0, -1.0, 2.0};
  EXPECT_NEAR(dephased_entropy(m, raw), dephased_entropy(m, raw.canonical()), 1e-13);
}

TEST(Basis, LocalUnitaryColumns) {
  const Matrix2 u = local_unitary(0.7, 1.3);
  EXPECT_LT((u.adjoint() * u - Matrix2::Identity()).norm(), 1e-15);
  EXPECT_NEAR(u(0, 0).real(), std::cos(0.35), 1e-15);
  EXPECT_NEAR(std::arg(u(1, 0)), 1.3, 1e-15);
  EXPECT_LT((product_unitary({0, 0, 0, 0}) - Matrix4::Identity()).norm(), 1e-15);
}

TEST(RCoefficients, TabulatedMatchesDense) {
  Lcg64 rng(9);
  for (int n = 0; n < 300; ++n) {
    const XState s = random_x_state(rng);
    const MeasurementBasis b = random_basis(rng);
    const ProbabilityTable t = r_coefficients(bloch_from_x(s), b);
    const ProbabilityTable g = r_coefficients_general(to_dense(s), b);
    for (int i = 0; i < 2; ++i) {
      EXPECT_NEAR(t.pa[i], g.pa[i], 1e-14);
      EXPECT_NEAR(t.pb[i], g.pb[i], 1e-14);
      for (int j = 0; j < 2; ++j) EXPECT_NEAR(t.joint[i][j], g.joint[i][j], 1e-14);
    }
  }
}

TEST(Tables, ProductHasNoInformation) {
  ProbabilityTable t;
  t.pa = {0.3, 0.7};
  t.pb = {0.6, 0.4};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t.joint[i][j] = t.pa[i] * t.pb[j];
  EXPECT_NEAR(table_mutual_information(t), 0.0, 1e-15);
  EXPECT_NEAR(joint_entropy(t), binary_entropy(0.3) + binary_entropy(0.6), 1e-14);
}

TEST(OptimalBasis, AsymmetricStatesSelectZAndEquator) {
  Lcg64 rng(31);
  for (int n = 0; n < 4; ++n) {
    const DensityMatrix m = to_dense(random_x_state(rng));
    const OptimizationResult r = find_optimal_basis(m);
    EXPECT_LE(r.value, 1e-6);
    ASSERT_EQ(r.argument.size(), 4u);
    EXPECT_NEAR(r.argument[0], 0.0, 1e-9);
    EXPECT_NEAR(r.argument[2], 0.5 * kPi, 1e-9);
    EXPECT_EQ(r.grid_resolution, 32);
  }
}

TEST(OptimalBasis, RelativeEntropyCriterion) {
  SearchOptions re;
  re.criterion = BasisCriterion::kRelativeEntropy;
  // Diagonal state: no dephasing needed, z-z basis.
  const DensityMatrix diag = to_dense(XState::make(0.4, 0.3, 0.2, 0.0, 0.0));
  const OptimizationResult r = find_optimal_basis(diag, re);
  EXPECT_NEAR(r.argument[0], 0.0, 1e-9);
  EXPECT_NEAR(r.argument[2], 0.0, 1e-9);
  EXPECT_NEAR(r.value, von_neumann_entropy(spectrum(diag)), 1e-12);
  // Werner z = 0.9 through the relative-entropy basis.
  EXPECT_NEAR(laqc_bruteforce(to_dense(werner(0.9)), re).value, 0.7136030428840436, 1e-8);
}

TEST(OptimalBasis, RelativeEntropyBoundedByStateEntropy) {
  SearchOptions re;
  re.criterion = BasisCriterion::kRelativeEntropy;
  re.basis_grid = 16;
  Lcg64 rng(13);
  for (int n = 0; n < 3; ++n) {
    const DensityMatrix m = to_dense(random_x_state(rng));
    const double best = find_optimal_basis(m, re).value;
    EXPECT_GE(best, von_neumann_entropy(spectrum(m)) - 1e-12);
    EXPECT_LE(best, dephased_entropy(m, {0, 0, 0, 0}) + 1e-12);
  }
}

TEST(OptimalBasis, RelativeEntropyInvariantUnderLocalUnitaries) {
  SearchOptions re;
  re.criterion = BasisCriterion::kRelativeEntropy;
  re.basis_grid = 16;
  Lcg64 rng(19);
  for (int n = 0; n < 3; ++n) {
    const DensityMatrix m = to_dense(random_x_state(rng));
    const Matrix4 u = kron(random_unitary(rng), random_unitary(rng));
    const DensityMatrix rotated(u * m.matrix() * u.adjoint());
    EXPECT_NEAR(find_optimal_basis(m, re).value, find_optimal_basis(rotated, re).value, 1e-6);
  }
}

TEST(OptimalBasis, Deterministic) {
  Lcg64 rng(1);
  const DensityMatrix m = to_dense(random_x_state(rng));
  const OptimizationResult a = find_optimal_basis(m), b = find_optimal_basis(m);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.argument, b.argument);
  EXPECT_EQ(a.refinement_iterations, b.refinement_iterations);
}

TEST(Complementary, MaximumAtQuarterTurns) {
  Lcg64 rng(6);
  const BlochX v = bloch_from_x(random_x_state(rng));
  const MeasurementBasis comp{0.0, 0.0, 0.5 * kPi, 0.0};
  const double peak = complementary_mutual_information(v, comp, 0.5 * kPi, 0.5 * kPi);
  EXPECT_NEAR(peak, g_j(v.t2), 1e-14);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      EXPECT_LE(complementary_mutual_information(v, comp, i * kPi / 8, j * kPi / 8),
                peak + 1e-14);
  const MeasurementBasis swapped{0.5 * kPi, 0.0, kPi, 0.0};
  EXPECT_NEAR(complementary_mutual_information(v, swapped, 0.5 * kPi, 0.5 * kPi), g_j(v.t2),
              1e-14);
}

TEST(Complementary, RejectsOtherBases) {
  const BlochX v = bloch_from_x(werner(0.5));
  EXPECT_THROW(complementary_mutual_information(v, {0.3, 0.0, 0.5 * kPi, 0.0}, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(complementary_mutual_information(v, {0.0, 0.0, 0.0, 0.0}, 0, 0),
               std::invalid_argument);
}

TEST(LaqcBruteforce, MatchesClosedFormOnAsymmetricStates) {
  Lcg64 rng(77);
  for (int n = 0; n < 8; ++n) {
    const XState s = random_x_state(rng);
    const OptimizationResult r = laqc_bruteforce(to_dense(s));
    EXPECT_NEAR(r.value, laqc(s), 1e-6) << "n=" << n;
    EXPECT_EQ(r.argument.size(), 6u);
    EXPECT_LE(classical_correlations_at(to_dense(s), find_optimal_basis(to_dense(s))).value,
              1e-6);
  }
}

TEST(LaqcBruteforce, Anchors) {
  EXPECT_NEAR(laqc_bruteforce(to_dense(werner(1.0))).value, 1.0, 1e-9);
  EXPECT_NEAR(laqc_bruteforce(to_dense(werner(0.0))).value, 0.0, 1e-12);
  EXPECT_NEAR(classical_correlations_bruteforce(to_dense(werner(0.0))).value, 0.0, 1e-12);
}

TEST(DiscordBruteforce, AnchorsAndMcdmAgreement) {
  EXPECT_NEAR(discord_b_bruteforce(to_dense(werner(1.0))).value, 1.0, 1e-9);
  EXPECT_NEAR(discord_b_bruteforce(to_dense(werner(0.5))).value, 0.26248318376373436, 1e-9);
  EXPECT_NEAR(discord_b_bruteforce(to_dense(werner(0.0))).value, 0.0, 1e-12);
  Lcg64 rng(45);
  for (int n = 0; n < 60; ++n) {
    const XState s = random_x_state(rng);
    const OptimizationResult r = discord_b_bruteforce(to_dense(s));
    EXPECT_NEAR(r.value, discord_b_mcdm(s), 1e-8) << "n=" << n;
    EXPECT_GE(r.value, -1e-12);
    EXPECT_EQ(r.argument.size(), 2u);
  }
}

TEST(Result, BasisOfRequiresFourAngles) {
  OptimizationResult r;
  r.argument = {0.0, 1.0};
  EXPECT_THROW(basis_of(r), std::invalid_argument);
}

}  // namespace
}  // namespace qcorr::oracle

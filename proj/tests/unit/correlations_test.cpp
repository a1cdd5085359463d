#include <gtest/gtest.h>

#include <cmath>

#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/oracle.hpp"
#include "qcorr/sampling.hpp"

namespace qcorr {
namespace {

TEST(GFunction, FrozenValues) {
  EXPECT_EQ(g_j(0.0), 0.0);
  EXPECT_DOUBLE_EQ(g_j(1.0), 1.0);
  EXPECT_DOUBLE_EQ(g_j(-1.0), 1.0);
  EXPECT_NEAR(g_j(0.5), 0.18872187554086717, 1e-14);
  EXPECT_NEAR(g_j(-0.6), 0.27807190511263774, 1e-14);
  EXPECT_NEAR(g_j(0.9), 0.7136030428840436, 1e-14);
}

TEST(GPlusMinus, EqualsComputationalBasisInformation) {
  Lcg64 rng(8);
  for (int n = 0; n < 200; ++n) {
    const bool sym = n % 2 == 0;
    const XState s = sym ? random_symmetric_x_state(rng) : random_antisymmetric_x_state(rng);
    const BlochX v = bloch_from_x(s);
    const double table =
        oracle::table_mutual_information(oracle::r_coefficients(v, {0, 0, 0, 0}));
    const double g = g_pm(v.x3, v.t3, sym ? GBranch::kPlus : GBranch::kMinus);
    EXPECT_NEAR(g, table, 1e-12) << "n=" << n;
  }
}

TEST(GPlusMinus, DomainErrors) {
  EXPECT_THROW(g_pm(1.0, 0.0, GBranch::kPlus), std::domain_error);
  EXPECT_THROW(g_pm(-1.0, 0.0, GBranch::kMinus), std::domain_error);
  EXPECT_THROW(g_pm(0.9, -0.9, GBranch::kPlus), std::domain_error);
  EXPECT_NEAR(g_pm(0.0, 0.0, GBranch::kPlus), 0.0, 1e-15);
}

TEST(Classify, Kinds) {
  EXPECT_EQ(classify(werner(0.4)).kind, XSymmetry::kSymmetric);
  EXPECT_EQ(classify(XState::make(0.25, 0.1, 0.4, 0.1, 0.0)).kind, XSymmetry::kAntiSymmetric);
  EXPECT_EQ(classify(XState::make(0.4, 0.1, 0.2, 0.1, 0.05)).kind, XSymmetry::kAsymmetric);
  EXPECT_EQ(classify(XState::make(0.4, 0.1, 0.1 + 1e-6, 0.1, 0.05), 1e-5).kind,
            XSymmetry::kSymmetric);
  EXPECT_STREQ(to_string(XSymmetry::kAntiSymmetric), "anti-symmetric");
}

TEST(Laqc, AsymmetricIsGOfT2) {
  const XState s = XState::make(0.4, 0.1, 0.2, 0.1, 0.05);
  EXPECT_NEAR(laqc(s), g_j(0.1), 1e-15);
  EXPECT_NEAR(laqc_asymmetric(bloch_from_x(s)), g_j(0.1), 1e-15);
}

TEST(Laqc, SymmetricTakesLargestBranch) {
  // Werner: T1 = T2 = -z, x3 = 0, so g+ = I(zz table) = g(z) as well.
  EXPECT_NEAR(laqc(werner(0.5)), 0.18872187554086717, 1e-14);
  EXPECT_NEAR(laqc(werner(1.0)), 1.0, 1e-14);
  // Classical correlated mixture (|00><00| + |11><11|)/2: only g+ is nonzero.
  const XState cl = XState::make(0.5, 0.0, 0.0, 0.0, 0.0);
  EXPECT_NEAR(laqc(cl), 1.0, 1e-14);
  // |00>: |x3| = 1 skips g+.
  EXPECT_EQ(laqc(XState::make(1.0, 0.0, 0.0, 0.0, 0.0)), 0.0);
}

TEST(Laqc, AntiSymmetricUsesMinusBranch) {
  const XState s = XState::make(0.2, 0.5, 0.1, 0.0, 0.0);
  const BlochX v = bloch_from_x(s);
  const double expected = oracle::table_mutual_information(oracle::r_coefficients(v, {}));
  EXPECT_NEAR(laqc(s), expected, 1e-12);
}

TEST(ClassicalCorrelations, ZeroForAsymmetricRejectedOtherwise) {
  EXPECT_EQ(classical_correlations_asymmetric(XState::make(0.4, 0.1, 0.2, 0.1, 0.05)), 0.0);
  EXPECT_THROW(classical_correlations_asymmetric(werner(0.3)), std::invalid_argument);
}

TEST(Concurrence, Anchors) {
  EXPECT_NEAR(concurrence_wootters(to_dense(werner(1.0))), 1.0, 1e-12);
  EXPECT_NEAR(concurrence_x(werner(1.0)), 0.5, 1e-15);
  EXPECT_NEAR(concurrence_wootters(to_dense(werner(0.8))), 0.7, 1e-12);
  EXPECT_NEAR(concurrence_wootters(to_dense(werner(0.3))), 0.0, 1e-12);
  const XState bell = XState::make(0.5, 0.0, 0.0, 0.0, 0.5);
  EXPECT_NEAR(concurrence_wootters(to_dense(bell)), 1.0, 1e-12);
  EXPECT_NEAR(concurrence_wootters(to_dense(werner(0.0))), 0.0, 1e-12);
}

TEST(Concurrence, WoottersIsTwiceXFormula) {
  Lcg64 rng(21);
  for (int n = 0; n < 300; ++n) {
    const XState s = random_x_state(rng);
    EXPECT_NEAR(concurrence_wootters(to_dense(s)), 2.0 * concurrence_x(s), 1e-10);
  }
}

TEST(Discord, FrozenAndAnchors) {
  EXPECT_NEAR(discord_b_mcdm(werner(0.5)), 0.26248318376373436, 1e-12);
  EXPECT_NEAR(discord_b_mcdm(werner(1.0)), 1.0, 1e-12);
  EXPECT_NEAR(discord_b_mcdm(werner(0.0)), 0.0, 1e-12);
  // Classical state: no discord.
  EXPECT_NEAR(discord_b_mcdm(XState::make(0.5, 0.0, 0.0, 0.0, 0.0)), 0.0, 1e-12);
}

TEST(Discord, InvariantUnderCoherenceSigns) {
  Lcg64 rng(4);
  for (int n = 0; n < 100; ++n) {
    const XState s = random_x_state(rng);
    const XState flipped = XState::make(s.a(), s.b(), s.c(), -s.z(), s.w());
    EXPECT_NEAR(discord_b_mcdm(s), discord_b_mcdm(flipped), 1e-13);
  }
}

TEST(Discord, N2IsZBasisConditionalEntropy) {
  // diag(0.3, 0.7) (x) diag(0.6, 0.4): H(A|B) = H(A).
  const double qa = 0.3;
  const XState s = XState::make(qa * 0.6, qa * 0.4, (1 - qa) * 0.6, 0.0, 0.0);
  EXPECT_NEAR(n2(s.a(), s.b(), s.c(), s.d()), binary_entropy(qa), 1e-14);
  EXPECT_NEAR(n1(0.0, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(n1(0.6, 0.8), 0.0, 1e-15);
}

TEST(Report, FieldsFollowClass) {
  const CorrelationReport sym = report(werner(0.5));
  EXPECT_FALSE(sym.classical.has_value());
  EXPECT_NEAR(sym.concurrence_wootters, 0.25, 1e-12);
  const CorrelationReport asym = report(XState::make(0.4, 0.1, 0.2, 0.1, 0.05));
  ASSERT_TRUE(asym.classical.has_value());
  EXPECT_EQ(*asym.classical, 0.0);
  EXPECT_EQ(asym.xclass.kind, XSymmetry::kAsymmetric);
}

}  // namespace
}  // namespace qcorr

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "univalence/function_catalog.hpp"

using namespace univalence;
using univalence::testing::catalog_functions;
using univalence::testing::random_exterior_points;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::UsageError;
}

}  // namespace

TEST(Catalog, IdentityValue) {
  const MeromorphicFn f = identity_fn();
  EXPECT_EQ(f(2.0), cplx(2.0));
  EXPECT_EQ(f.declared_class(), DeclaredClass::Sigma0);
}

TEST(Catalog, JoukowskiValueAndClass) {
  const MeromorphicFn f = joukowski_fn(0.5);
  EXPECT_NEAR(std::abs(f(2.0) - 2.25), 0.0, 1e-15);
  EXPECT_EQ(f.declared_class(), DeclaredClass::Sigma0);
}

TEST(Catalog, LaurentAgreesWithJoukowski) {
  const MeromorphicFn a = laurent_fn(1.0, 0.0, {0.5});
  const MeromorphicFn b = joukowski_fn(0.5);
  for (cplx z : random_exterior_points(100, 1.01, 20.0, 3)) {
    const ComplexJet ja = a.jet<3>(z);
    const ComplexJet jb = b.jet<3>(z);
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_LE(std::abs(ja.derivative(k) - jb.derivative(k)), 1e-13 * std::max(1.0, std::abs(jb.derivative(k))));
    }
  }
}

TEST(Catalog, LaurentWithConstantTermIsSigma) {
  EXPECT_EQ(laurent_fn(1.0, 3.0, {}).declared_class(), DeclaredClass::Sigma);
  EXPECT_EQ(laurent_fn(2.0, 0.0, {}).declared_class(), DeclaredClass::Sigma);
}

TEST(Catalog, InvalidSpecs) {
  EXPECT_EQ(kind_of([] { laurent_fn(0.0, 1.0, {}); }), ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([] { moebius_fn(identity_fn(), 1.0, 2.0, 2.0, 4.0); }), ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([] { make_sigma_function(MoebiusOf{}); }), ErrorKind::InvalidSpec);
}

TEST(Catalog, PolesAreReported) {
  const MeromorphicFn recip = moebius_fn(identity_fn(), 0.0, 1.0, 1.0, 0.0);
  EXPECT_EQ(kind_of([&] { (void)recip.jet<3>(0.0); }), ErrorKind::PoleAtPoint);
  EXPECT_EQ(kind_of([] { (void)joukowski_fn(0.5).jet<3>(0.0); }), ErrorKind::PoleAtPoint);
}

TEST(Catalog, MoebiusOfIdentityHasClosedFormJet) {
  // 1/z at z = 2: 0.5, -0.25, 0.25, -0.375.
  const MeromorphicFn recip = moebius_fn(identity_fn(), 0.0, 1.0, 1.0, 0.0);
  const ComplexJet j = recip.jet<3>(2.0);
  const std::array<double, 4> expected{0.5, -0.25, 0.25, -0.375};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(j.derivative(k) - expected[k]), 0.0, 1e-15);
}

TEST(Normalization, IdentityIsSigma0) {
  const auto r = validate_sigma_normalization(identity_fn(), SamplingPlan{});
  EXPECT_NEAR(std::abs(r.b - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.b0), 0.0, 1e-12);
  EXPECT_EQ(r.membership, SigmaMembership::Sigma0);
}

TEST(Normalization, ShiftedLaurentIsSigmaOnly) {
  const auto r = validate_sigma_normalization(laurent_fn(1.0, 3.0, {}), SamplingPlan{});
  EXPECT_NEAR(std::abs(r.b - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.b0 - 3.0), 0.0, 1e-12);
  EXPECT_EQ(r.membership, SigmaMembership::Sigma);
}

TEST(Normalization, JoukowskiResidualsAtLargeRadius) {
  SamplingPlan plan;
  plan.r_max = 1e4;
  const auto r = validate_sigma_normalization(joukowski_fn(0.5), plan);
  EXPECT_LE(r.b_residual, 1e-8);
  EXPECT_LE(r.b0_residual, 1e-8);
  EXPECT_EQ(r.membership, SigmaMembership::Sigma0);
}

TEST(Normalization, ScaledFunctionIsNeitherWhenLeadingTermVanishes) {
  const auto r = validate_sigma_normalization(moebius_fn(identity_fn(), 0.0, 1.0, 1.0, 0.0), SamplingPlan{});
  EXPECT_EQ(r.membership, SigmaMembership::Neither);
}

TEST(HFunctions, ConstantOne) {
  const HFunction h = constant_one_h();
  for (cplx z : random_exterior_points(20, 1.01, 10.0, 5)) {
    const ComplexJet j = h.jet<3>(z);
    EXPECT_EQ(j.value(), cplx(1.0));
    EXPECT_EQ(j.d1(), cplx(0.0));
  }
}

TEST(HFunctions, InverseSquareValues) {
  const ComplexJet j = inverse_square_h(0.25).jet<3>(2.0);
  EXPECT_NEAR(std::abs(j.value() - 1.0625), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(j.d1() + 0.0625), 0.0, 1e-15);
}

TEST(HFunctions, InverseSquareZeroIsConstantOne) {
  const HFunction a = inverse_square_h(0.0);
  const HFunction b = constant_one_h();
  for (cplx z : random_exterior_points(20, 1.01, 10.0, 6)) {
    const ComplexJet ja = a.jet<3>(z);
    const ComplexJet jb = b.jet<3>(z);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(ja.derivative(k), jb.derivative(k));
  }
}

TEST(HFunctions, OddPowersAreRejected) {
  EXPECT_EQ(kind_of([] { make_h_function(InversePowerSeries{{0.1, 0.2}}); }), ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([] { make_h_function(InversePowerSeries{{0.0, 0.2, 0.05}}); }), ErrorKind::InvalidSpec);
  const HFunction ok = make_h_function(InversePowerSeries{{0.0, 0.2, 0.0, 0.1}});
  ASSERT_EQ(ok.even_coefficients().size(), 2u);
  EXPECT_EQ(ok.even_coefficients()[0], cplx(0.2));
  EXPECT_EQ(ok.even_coefficients()[1], cplx(0.1));
}

TEST(HAdmissibility, ConstantOnePasses) {
  const auto r = validate_h_admissible(constant_one_h(), SamplingPlan{});
  EXPECT_EQ(r.min_re_h, 1.0);
  EXPECT_EQ(r.max_ratio, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(HAdmissibility, InverseSquareHalfPasses) {
  const auto r = validate_h_admissible(inverse_square_h(0.5), SamplingPlan{});
  EXPECT_GE(r.min_re_h, 0.5 - 1e-6);
  EXPECT_LT(r.min_re_h, 0.5 + 1e-3);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.conditions_agree);
}

TEST(HAdmissibility, InverseSquareSixTenthsFails) {
  const auto r = validate_h_admissible(inverse_square_h(0.6), SamplingPlan{});
  EXPECT_LT(r.min_re_h, 0.5);
  EXPECT_NEAR(std::abs(r.min_re_h_at), kNearBoundaryRadius, 1e-12);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.conditions_agree);
}

TEST(HAdmissibilityProperty, HalfPlaneAndDiskConditionsAgree) {
  for (double c : {0.1, 0.3, 0.5, 0.7, 0.9, 1.3}) {
    const auto r = validate_h_admissible(inverse_square_h(std::polar(c, 0.4)), SamplingPlan{});
    EXPECT_EQ(r.disagreements, 0u) << c;
  }
}

TEST(PowerBranch, EqualFunctionsGiveOne) {
  for (const auto& [name, f] : catalog_functions()) {
    for (cplx z : random_exterior_points(10, 1.1, 5.0, 8)) {
      try {
        const ComplexJet v = power_branch(f, f, cplx{0.7, 0.3}, z);
        EXPECT_NEAR(std::abs(v.value() - 1.0), 0.0, 1e-12) << name;
        for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(std::abs(v.derivative(k)), 0.0, 1e-10) << name;
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CriticalPoint) << name;
      }
    }
  }
}

TEST(PowerBranch, SquareRootOfDerivativeRatio) {
  const ComplexJet v = power_branch(joukowski_fn(0.5), joukowski_fn(1.2), 0.5, 2.0);
  EXPECT_NEAR(std::abs(v.value() - 0.894427191), 0.0, 1e-9);
}

TEST(PowerBranch, AlphaZeroIsOne) {
  const ComplexJet v = power_branch(joukowski_fn(0.5), joukowski_fn(1.2), 0.0, cplx{1.5, 0.7});
  EXPECT_EQ(v.value(), cplx(1.0));
  EXPECT_EQ(v.d1(), cplx(0.0));
}

TEST(PowerBranch, RejectsInteriorAndCriticalPoints) {
  EXPECT_EQ(kind_of([] { power_branch(identity_fn(), joukowski_fn(0.5), 0.5, 0.5); }), ErrorKind::OutsideDomain);
  // joukowski(1.44) has f'(1.2) = 0.
  EXPECT_EQ(kind_of([] { power_branch(joukowski_fn(1.44), identity_fn(), 0.5, 1.2); }), ErrorKind::CriticalPoint);
}

TEST(PowerBranchProperty, Reciprocity) {
  const MeromorphicFn f = joukowski_fn(cplx{0.3, 0.2});
  const MeromorphicFn g = laurent_fn(1.0, 0.1, {cplx{-0.2, 0.1}, 0.05});
  for (cplx z : random_exterior_points(50, 1.05, 10.0, 9)) {
    const cplx alpha{0.4, -0.3};
    const ComplexJet prod = power_branch(f, g, alpha, z) * power_branch(g, f, alpha, z);
    EXPECT_NEAR(std::abs(prod.value() - 1.0), 0.0, 1e-12);
    for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(std::abs(prod.derivative(k)), 0.0, 1e-10);
  }
}

TEST(PowerBranchProperty, MatchesDirectDerivativeOfPower) {
  // v' = alpha v (g''/g' - f''/f').
  const MeromorphicFn f = joukowski_fn(0.3);
  const MeromorphicFn g = joukowski_fn(cplx{0.1, 0.4});
  const cplx alpha{0.6, 0.2};
  for (cplx z : random_exterior_points(40, 1.05, 8.0, 10)) {
    const ComplexJet v = power_branch(f, g, alpha, z);
    const auto jf = f.jet<3>(z);
    const auto jg = g.jet<3>(z);
    const cplx expected = alpha * v.value() * (jg.d2() / jg.d1() - jf.d2() / jf.d1());
    EXPECT_NEAR(std::abs(v.d1() - expected), 0.0, 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(PowerBranchProperty, BranchIsContinuousAlongRays) {
  // With a ratio that winds around zero the principal power would jump;
  // the continued branch stays continuous in |z| along a ray.
  const MeromorphicFn f = identity_fn();
  const MeromorphicFn g = laurent_fn(1.0, 0.0, {cplx{0.0, 0.9}});
  const cplx alpha{2.5, 0.0};
  const double theta = 1.1;
  cplx previous = power_branch(f, g, alpha, std::polar(30.0, theta)).value();
  for (double r = 30.0; r > 1.05; r *= 0.97) {
    const cplx v = power_branch(f, g, alpha, std::polar(r, theta)).value();
    EXPECT_LT(std::abs(v - previous), 0.2) << r;
    previous = v;
  }
}

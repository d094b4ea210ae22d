#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"
#include "univalence/oracle.hpp"

using namespace univalence;

namespace {

std::vector<cplx> circle(double r, std::size_t n, int turns = 1) {
  std::vector<cplx> c;
  for (std::size_t k = 0; k <= n * static_cast<std::size_t>(turns); ++k) {
    c.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
  }
  c.back() = c.front();
  return c;
}

SamplingPlan collision_plan() {
  SamplingPlan plan;
  plan.r_min = 1.01;
  plan.r_max = 1.4;
  return plan;
}

}  // namespace

TEST(EvaluatePlain, MatchesJets) {
  for (const auto& [name, f] : univalence::testing::catalog_functions()) {
    for (cplx z : univalence::testing::random_exterior_points(20, 1.05, 10.0, 91)) {
      EXPECT_LE(std::abs(evaluate_plain(f, z) - f(z)), 1e-13 * std::max(1.0, std::abs(f(z)))) << name;
    }
  }
}

TEST(Injectivity, IdentityHasNoCollisions) {
  const auto r = injectivity_scan(identity_fn(), SamplingPlan{});
  EXPECT_TRUE(r.collisions.empty());
  EXPECT_EQ(r.grid_size, 8192u);
}

TEST(Injectivity, JoukowskiAboveOneCollides) {
  InjectivityOptions options;
  options.separation_floor = 0.05;
  const auto r = injectivity_scan(joukowski_fn(1.2), collision_plan(), options);
  ASSERT_FALSE(r.collisions.empty());
  bool near_analytic_pair = false;
  for (const auto& c : r.collisions) {
    EXPECT_LE(c.image_distance, 1e-9);
    EXPECT_GE(c.domain_distance, 0.05);
    EXPECT_NEAR(std::abs(c.z1 * c.z2 - 1.2), 0.0, 1e-6);
    if (std::abs(c.z1 - 1.05) < 0.02 && std::abs(c.z2 - 1.1428571) < 0.03) near_analytic_pair = true;
    if (std::abs(c.z2 - 1.05) < 0.02 && std::abs(c.z1 - 1.1428571) < 0.03) near_analytic_pair = true;
  }
  EXPECT_TRUE(near_analytic_pair);
}

TEST(Injectivity, JoukowskiBelowOneHasNoCollisions) {
  EXPECT_TRUE(injectivity_scan(joukowski_fn(0.8), SamplingPlan{}).collisions.empty());
  EXPECT_TRUE(injectivity_scan(joukowski_fn(0.8), collision_plan()).collisions.empty());
}

TEST(InjectivityProperty, PairwiseAgreesWithBucketed) {
  SamplingPlan plan = collision_plan();
  plan.radial_count = 20;
  plan.angular_count = 64;
  for (double c : {0.8, 1.2, 1.3}) {
    InjectivityOptions bucketed, pairwise;
    bucketed.separation_floor = pairwise.separation_floor = 0.05;
    pairwise.mode = ScanMode::pairwise;
    const auto a = injectivity_scan(joukowski_fn(c), plan, bucketed);
    const auto b = injectivity_scan(joukowski_fn(c), plan, pairwise);
    ASSERT_EQ(a.collisions.size(), b.collisions.size()) << c;
    for (std::size_t i = 0; i < a.collisions.size(); ++i) {
      EXPECT_EQ(a.collisions[i].z1, b.collisions[i].z1);
      EXPECT_EQ(a.collisions[i].z2, b.collisions[i].z2);
    }
  }
}

TEST(InjectivityProperty, InvariantUnderGridReversal) {
  SamplingPlan plan = collision_plan();
  plan.radial_count = 24;
  plan.angular_count = 64;
  InjectivityOptions options;
  options.separation_floor = 0.05;
  auto points = sample_exterior(plan);
  const auto forward = injectivity_scan(joukowski_fn(1.2), points, plan, options);
  std::reverse(points.begin(), points.end());
  const auto backward = injectivity_scan(joukowski_fn(1.2), points, plan, options);
  ASSERT_EQ(forward.collisions.size(), backward.collisions.size());
  ASSERT_FALSE(forward.collisions.empty());
  for (std::size_t i = 0; i < forward.collisions.size(); ++i) {
    EXPECT_EQ(forward.collisions[i].z1, backward.collisions[i].z1);
    EXPECT_EQ(forward.collisions[i].z2, backward.collisions[i].z2);
  }
}

TEST(Winding, Examples) {
  const auto unit = circle(1.0, 128);
  EXPECT_EQ(winding_number(unit, 0.0), 1);
  EXPECT_EQ(winding_number(unit, 2.0), 0);
  EXPECT_EQ(winding_number(circle(1.0, 128, 2), 0.0), 2);
}

TEST(WindingProperty, ReversalNegates) {
  auto c = circle(1.3, 77);
  for (cplx p : {cplx{0.1, 0.2}, cplx{-0.5, 0.9}, cplx{3.0, 0.0}}) {
    auto reversed = c;
    std::reverse(reversed.begin(), reversed.end());
    EXPECT_EQ(winding_number(reversed, p), -winding_number(c, p));
  }
}

TEST(Winding, Errors) {
  auto open = circle(1.0, 64);
  open.pop_back();
  try {
    (void)winding_number(open, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OpenContour);
  }
  try {
    (void)winding_number(circle(1.0, 64), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PointTooCloseToContour);
  }
}

TEST(FiniteDifferences, Identity) {
  const ComplexJet j = fd_derivatives(identity_fn(), 2.0, 1e-3);
  EXPECT_NEAR(std::abs(j.value() - 2.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(j.d1() - 1.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(j.d2()), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(j.d3()), 0.0, 1e-6);
}

TEST(FiniteDifferences, Joukowski) {
  const ComplexJet j = fd_derivatives(joukowski_fn(0.5), 2.0, 1e-3);
  EXPECT_NEAR(std::abs(j.value() - 2.25), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(j.d1() - 0.875), 0.0, 1e-6);
  EXPECT_NEAR(std::abs(j.d2() - 0.125), 0.0, 1e-6);
  EXPECT_NEAR(std::abs(j.d3() + 0.1875), 0.0, 1e-5);
}

TEST(FiniteDifferences, StencilMustStayOutside) {
  try {
    (void)fd_derivatives(identity_fn(), 1.001, 1e-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StencilLeavesDomain);
  }
}

#include <gtest/gtest.h>

#include <sstream>

#include "univalence/parallel.hpp"
#include "univalence/region_scan.hpp"

using namespace univalence;

namespace {

CriterionParams becker(const MeromorphicFn& f) {
  CriterionParams p;
  p.f = f;
  p.criterion = CriterionId::becker;
  return normalize_params(p);
}

}  // namespace

TEST(Sampling, SmallPlan) {
  SamplingPlan plan;
  plan.radial_count = 2;
  plan.angular_count = 4;
  plan.r_min = 1.1;
  plan.r_max = 2.0;
  const auto pts = sample_exterior(plan);
  ASSERT_EQ(pts.size(), 8u);
  const std::array<double, 2> radii{1.1, 2.0};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      const cplx expected = std::polar(radii[i], std::numbers::pi / 2.0 * static_cast<double>(k));
      EXPECT_NEAR(std::abs(pts[i * 4 + k] - expected), 0.0, 1e-15);
    }
  }
}

TEST(Sampling, SingleRadiusUsesInnerCircle) {
  SamplingPlan plan;
  plan.radial_count = 1;
  plan.angular_count = 16;
  for (cplx z : sample_exterior(plan)) EXPECT_NEAR(std::abs(z), plan.r_min, 1e-15);
}

TEST(Sampling, DefaultPlanSize) { EXPECT_EQ(sample_exterior(SamplingPlan{}).size(), 8192u); }

TEST(Sampling, RadiiEndExactly) {
  const auto radii = plan_radii(SamplingPlan{});
  EXPECT_EQ(radii.front(), 1.001);
  EXPECT_EQ(radii.back(), 50.0);
  for (std::size_t i = 1; i < radii.size(); ++i) EXPECT_GT(radii[i], radii[i - 1]);
}

TEST(Sampling, InvalidPlans) {
  for (auto mutate : std::vector<void (*)(SamplingPlan&)>{
           [](SamplingPlan& p) { p.r_min = 1.0; }, [](SamplingPlan& p) { p.r_max = 1.0005; },
           [](SamplingPlan& p) { p.radial_count = 0; }, [](SamplingPlan& p) { p.angular_count = 0; },
           [](SamplingPlan& p) { p.r_max = std::numeric_limits<double>::infinity(); }}) {
    SamplingPlan plan;
    mutate(plan);
    try {
      validate_plan(plan);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidPlan);
    }
  }
}

TEST(EstimateSup, IdentityIsZero) {
  const SupReport r = estimate_sup(becker(identity_fn()), SamplingPlan{});
  EXPECT_EQ(r.sup_estimate, 0.0);
  EXPECT_TRUE(r.refinement_converged);
}

TEST(EstimateSup, BeckerJoukowskiApproachesLimitAtInfinity) {
  const SupReport r = estimate_sup(becker(joukowski_fn(0.4)), SamplingPlan{});
  EXPECT_GE(r.sup_estimate, 0.784);
  // The analytic supremum 0.8 is never attained; the extrapolated tail may
  // land on it up to rounding.
  EXPECT_LE(r.sup_estimate, 0.8 + 1e-12);
  EXPECT_NEAR(r.tail_estimate, 0.8, 1e-9);
  EXPECT_TRUE(r.argmax_at_tail);
  EXPECT_TRUE(r.refinement_converged);
}

TEST(EstimateSup, BeckerJoukowskiAboveOne) {
  const SupReport r = estimate_sup(becker(joukowski_fn(0.6)), SamplingPlan{});
  EXPECT_GE(r.sup_estimate, 1.0588);
}

TEST(EstimateSup, CriticalPointInRegion) {
  SamplingPlan plan;
  plan.r_min = 1.1;
  plan.r_max = 2.0;
  plan.radial_count = 2;
  plan.angular_count = 4;
  // joukowski(1.21) has a critical point at z = 1.1, a grid node.
  try {
    (void)estimate_sup(becker(joukowski_fn(1.21)), plan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CriticalPointInRegion);
    ASSERT_TRUE(e.location().has_value());
    EXPECT_NEAR(std::abs(*e.location() - 1.1), 0.0, 1e-12);
  }
}

TEST(EstimateSup, RecordsGridWhenAsked) {
  SamplingPlan plan;
  plan.radial_count = 4;
  plan.angular_count = 8;
  ScanOptions options;
  options.record_grid = true;
  const SupReport r = estimate_sup(becker(joukowski_fn(0.3)), plan, options);
  EXPECT_EQ(r.grid.size(), r.samples_evaluated);
  std::ostringstream csv;
  write_grid_csv(csv, r.grid);
  EXPECT_EQ(csv.str().substr(0, 10), "re,im,lhs\n");
}

TEST(EstimateSupProperty, RefinementIsMonotone) {
  CriterionParams p;
  p.f = joukowski_fn(cplx{0.3, 0.2});
  p.g = laurent_fn(1.0, 0.0, {0.1, cplx{0.0, 0.05}});
  p.h = inverse_square_h(0.3);
  p.alpha = cplx{0.4, 0.1};
  SamplingPlan plan;
  plan.radial_count = 16;
  plan.angular_count = 32;
  plan.refine_depth = 4;
  const SupReport r = estimate_sup(p, plan);
  ASSERT_EQ(r.sup_history.size(), 5u);
  for (std::size_t i = 1; i < r.sup_history.size(); ++i) EXPECT_GE(r.sup_history[i], r.sup_history[i - 1]);
}

TEST(EstimateSupProperty, DeterministicAcrossWorkers) {
  CriterionParams p;
  p.f = joukowski_fn(0.45);
  p.g = joukowski_fn(cplx{0.1, 0.1});
  p.h = inverse_square_h(0.2);
  SamplingPlan plan;
  plan.radial_count = 24;
  plan.angular_count = 48;
  ScanOptions one, four;
  four.workers = 4;
  const SupReport a = estimate_sup(p, plan, one);
  const SupReport b = estimate_sup(p, plan, four);
  EXPECT_EQ(a.sup_estimate, b.sup_estimate);
  EXPECT_EQ(a.argmax, b.argmax);
  EXPECT_EQ(a.samples_evaluated, b.samples_evaluated);
  EXPECT_EQ(a.sup_history, b.sup_history);
}

TEST(Verdict, Rules) {
  SupReport r;
  r.sup_estimate = 0.8;
  r.refinement_converged = true;
  Verdict v = issue_verdict(r, 1e-9);
  EXPECT_EQ(v.outcome, Outcome::pass);
  EXPECT_NEAR(v.margin, 0.2, 1e-15);
  r.sup_estimate = 1.0588;
  EXPECT_EQ(issue_verdict(r, 1e-9).outcome, Outcome::fail);
  r.sup_estimate = 0.97;
  r.refinement_converged = false;
  EXPECT_EQ(issue_verdict(r, 1e-9).outcome, Outcome::inconclusive);
  r.sup_estimate = 1.0 + 5e-10;
  r.refinement_converged = true;
  EXPECT_EQ(issue_verdict(r, 1e-9).outcome, Outcome::pass);
}

TEST(ParallelMap, KeepsOrderAndLowestError) {
  std::vector<int> in(100);
  for (int i = 0; i < 100; ++i) in[static_cast<std::size_t>(i)] = i;
  const auto out = parallel_map(in, [](int x) { return x * x; }, 4);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(out[static_cast<std::size_t>(i)], i * i);
  try {
    (void)parallel_map(
        in,
        [](int x) {
          if (x == 30 || x == 80) throw std::runtime_error(std::to_string(x));
          return x;
        },
        4);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "30");
  }
}

#include <gtest/gtest.h>

#include "bergmod/ball_geometry.hpp"
#include "bergmod/kernel_span.hpp"
#include "test_support.hpp"

using namespace bergmod;

namespace {

LinearVariety e1_line(int n) {
  CMatrix b = CMatrix::Zero(n, 1);
  b(0, 0) = 1.0;
  return LinearVariety(b);
}

SamplePlan plan(std::size_t m, double rho, std::uint64_t seed = 7) {
  SamplePlan p;
  p.count = m;
  p.rho_max = rho;
  p.seed = seed;
  return p;
}

// Points of radius <= 0.7 on a small polar grid of the variety's ambient space.
std::vector<Point> test_grid(int n, Rng& rng, int count = 60) {
  std::vector<Point> g;
  for (int k = 0; k < count; ++k) g.push_back(test::random_point(n, rng, 0.7));
  return g;
}

double sup_error(const SampledFunction& a, const SampledFunction& b, const std::vector<Point>& grid) {
  double e = 0.0;
  for (const auto& w : grid) e = std::max(e, std::abs(a(w) - b(w)));
  return e;
}

}  // namespace

TEST(SamplePlan, Validation) {
  EXPECT_THROW(plan(0, 0.9).validate(), PreconditionError);
  EXPECT_THROW(plan(10, 1.0).validate(), PreconditionError);
  auto p = plan(10, 0.9);
  p.scheme = SampleScheme::SeparatedNet;
  p.separation = 0.0;
  EXPECT_THROW(p.validate(), PreconditionError);
}

TEST(Sampling, LinearPointsLieOnVarietyInsideRadius) {
  Rng rng(1);
  const auto v = LinearVariety::span(test::random_matrix(3, 2, rng));
  const auto pts = sample_variety(v, plan(300, 0.9));
  ASSERT_EQ(pts.size(), 300u);
  for (const auto& p : pts) {
    EXPECT_LT(v.residual(p), 1e-12);
    EXPECT_LE(p.norm(), 0.9 + 1e-15);
  }
}

TEST(Sampling, Deterministic) {
  const auto v = e1_line(2);
  EXPECT_EQ(sample_variety(v, plan(50, 0.9, 3)), sample_variety(v, plan(50, 0.9, 3)));
  EXPECT_NE(sample_variety(v, plan(50, 0.9, 3)), sample_variety(v, plan(50, 0.9, 4)));
}

TEST(Sampling, NestedPrefixes) {
  const auto v = e1_line(2);
  const auto small = sample_variety(v, plan(50, 0.9));
  const auto large = sample_variety(v, plan(100, 0.9));
  EXPECT_TRUE(std::equal(small.begin(), small.end(), large.begin()));
}

TEST(Sampling, AffineAndGraphPointsLieOnVariety) {
  CVector base(2), dir(2);
  base << 1.0, 0.0;
  dir << 1.0, 1.0;
  const AffineVariety a(base, LinearVariety::span(dir));
  for (const auto& p : sample_variety(a, plan(100, 0.95))) {
    EXPECT_LT(a.residual(p), 1e-12);
    EXPECT_LE(p.norm(), 0.95 + 1e-12);
  }
  const GraphVariety g(1, {Polynomial::variable(1, 0) * Polynomial::variable(1, 0)});
  for (const auto& p : sample_variety(g, plan(100, 0.9))) {
    EXPECT_LT(g.residual(p), 1e-12);
    EXPECT_LE(p.norm(), 0.9 + 1e-12);
  }
}

TEST(Sampling, SeparatedNetRespectsSeparation) {
  auto p = plan(60, 0.95);
  p.scheme = SampleScheme::SeparatedNet;
  p.separation = 0.2;
  const auto pts = sample_variety(e1_line(2), p);
  ASSERT_EQ(pts.size(), 60u);
  double min_rho = 1.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) min_rho = std::min(min_rho, pseudo_distance(pts[i], pts[j]));
  EXPECT_GE(min_rho, 0.2);
}

TEST(Sampling, SeparatedNetReportsAchievedCount) {
  auto p = plan(100000, 0.5);
  p.scheme = SampleScheme::SeparatedNet;
  p.separation = 0.5;
  try {
    sample_variety(e1_line(2), p);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_GT(e.achieved(), 0u);
    EXPECT_LT(e.achieved(), 100000u);
  }
}

TEST(KernelSpan, SinglePointGram) {
  Point p(2);
  p << 0.3, cplx(0, 0.4);
  const auto s = build_span({p});
  EXPECT_NEAR(s.gram()(0, 0).real(), std::pow(1 - 0.25, -3.0), 1e-13);
  EXPECT_EQ(s.rank(), 1);
}

TEST(KernelSpan, DuplicatePointHasRankOne) {
  Point p(2);
  p << 0.3, 0.1;
  EXPECT_EQ(build_span({p, p}).rank(), 1);
}

TEST(KernelSpan, GramIsHermitianPsd) {
  const auto pts = sample_variety(LinearVariety::full(2), plan(80, 0.9));
  const auto s = build_span(pts);
  EXPECT_LT((s.gram() - s.gram().adjoint()).norm(), 1e-10 * s.gram().norm());
  for (int i = 0; i < s.rank(); ++i) EXPECT_GT(s.eigenvalues()[i], 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      EXPECT_EQ(s.gram()(i, j), kernel_inner(pts[j], pts[i]));  // <K_j, K_i>
}

TEST(KernelSpan, WhiteningIsOrthonormalForWellConditionedSpans) {
  Rng rng(2);
  std::vector<Point> pts;
  for (int k = 0; k < 50; ++k) pts.push_back(test::random_point(2, rng));
  const auto s = build_span(pts);
  EXPECT_LT(s.whitening_residual(), 1e-10);
  const CMatrix w = s.whitening();
  const CMatrix r = w.adjoint() * s.gram() * w - CMatrix::Identity(s.rank(), s.rank());
  EXPECT_LT(r.cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Project, KernelInSpanIsReproduced) {
  const auto pts = sample_variety(e1_line(2), plan(40, 0.9));
  const auto s = build_span(pts);
  const auto f = SampledFunction::kernel(pts[5]);
  const auto pr = project(s, f);
  Rng rng(3);
  for (const auto& w : test_grid(2, rng)) EXPECT_LT(std::abs(pr.evaluator(w) - f(w)), 1e-8 * std::abs(f(w)));
  EXPECT_NEAR(pr.norm, std::sqrt(kernel_norm_sq(pts[5])), 1e-8 * pr.norm);
}

TEST(Project, ConstantIsFixed) {
  const auto s = build_span(sample_variety(e1_line(2), plan(200, 0.95)));
  const auto pr = project(s, SampledFunction::from_polynomial(Polynomial::constant(2, 1.0)));
  Rng rng(4);
  for (const auto& w : test_grid(2, rng)) EXPECT_LT(std::abs(pr.evaluator(w) - 1.0), 1e-3);
}

TEST(Project, TransverseCoordinateVanishes) {
  const auto s = build_span(sample_variety(e1_line(2), plan(200, 0.95)));
  const auto pr = project(s, SampledFunction::from_polynomial(Polynomial::variable(2, 1)));
  Rng rng(5);
  for (const auto& w : test_grid(2, rng)) EXPECT_LT(std::abs(pr.evaluator(w)), 1e-3);
}

TEST(ProjectOracle, Examples) {
  const auto v = e1_line(2);
  Rng rng(6);
  const auto z1 = SampledFunction::from_polynomial(Polynomial::variable(2, 0));
  const auto z2 = SampledFunction::from_polynomial(Polynomial::variable(2, 1));
  for (const auto& w : test_grid(2, rng, 10)) {
    EXPECT_LT(std::abs(project_oracle_linear(v, z1)(w) - w[0]), 1e-15);
    EXPECT_LT(std::abs(project_oracle_linear(v, z2)(w)), 1e-15);
  }
  CMatrix d(2, 1);
  d << 1.0, 1.0;
  const auto diag = LinearVariety::span(d);
  const auto f = SampledFunction::from_polynomial(Polynomial::variable(2, 0) * Polynomial::variable(2, 1));
  for (const auto& w : test_grid(2, rng, 10)) {
    const cplx half_sum = (w[0] + w[1]) / 2.0;
    EXPECT_LT(std::abs(project_oracle_linear(diag, f)(w) - half_sum * half_sum), 1e-14);
  }
}

TEST(Project, ConvergesToOracleAsSamplesGrow) {
  Rng rng(7);
  const auto v = LinearVariety::span(test::random_matrix(3, 2, rng));
  const Polynomial p = Polynomial::monomial({2, 1, 0}, 1.0) + Polynomial::monomial({0, 0, 3}, cplx(0, 1)) +
                       Polynomial::constant(3, 0.5);
  const auto f = SampledFunction::from_polynomial(p);
  const auto oracle = project_oracle_linear(v, f);
  const auto grid = test_grid(3, rng);
  double prev = 1e300;
  for (std::size_t m : {50, 100, 200}) {
    const double e = sup_error(project(build_span(sample_variety(v, plan(m, 0.95))), f).evaluator, oracle, grid);
    EXPECT_LT(e, prev);
    prev = e;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(EquivalentMeasure, ConstantAndMass) {
  EXPECT_DOUBLE_EQ(equivalent_measure_constant(2, 1), 2.0);
  EXPECT_DOUBLE_EQ(equivalent_measure_constant(3, 0), 1.0);
  const auto mu = equivalent_measure(e1_line(2), PolarGrid{16, 16});
  EXPECT_NEAR(mu.total_mass(), 1.0, 1e-13);
  for (const auto& p : mu.points) EXPECT_EQ(p[1], cplx(0.0));
}

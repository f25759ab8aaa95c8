#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "bergmod/ball_geometry.hpp"
#include "test_support.hpp"

using namespace bergmod;
using bergmod::test::random_point;

namespace {

// phi_z written straight from the definition with dense projections.
Point phi_reference(const Point& z, const Point& w) {
  const int n = static_cast<int>(z.size());
  const double zz = z.squaredNorm();
  CMatrix p = CMatrix::Zero(n, n);
  if (zz > 0) p = z * z.adjoint() / zz;
  const CMatrix q = CMatrix::Identity(n, n) - p;
  const cplx den = 1.0 - test::brute_inner(w, z);
  return (z - p * w - std::sqrt(1.0 - zz) * (q * w)) / den;
}

// Real Jacobian determinant of phi_z at w by central differences on R^{2n}.
double fd_real_jacobian_det(const Point& z, const Point& w) {
  const int n = static_cast<int>(z.size());
  const MoebiusMap phi(z);
  const double h = 1e-6;
  Eigen::MatrixXd j(2 * n, 2 * n);
  for (int c = 0; c < 2 * n; ++c) {
    Point e = Point::Zero(n);
    e[c / 2] = (c % 2 == 0) ? cplx(h, 0) : cplx(0, h);
    const Point d = (phi(w + e) - phi(w - e)) / (2 * h);
    for (int r = 0; r < n; ++r) {
      j(2 * r, c) = d[r].real();
      j(2 * r + 1, c) = d[r].imag();
    }
  }
  return j.determinant();
}

}  // namespace

TEST(Moebius, MatchesDenseReference) {
  Rng rng(11);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 200; ++k) {
      const Point z = random_point(n, rng), w = random_point(n, rng);
      EXPECT_LT((MoebiusMap(z)(w) - phi_reference(z, w)).norm(), 1e-12);
    }
}

TEST(Moebius, ZeroBaseIsMinusIdentity) {
  Rng rng(2);
  const Point w = random_point(3, rng);
  EXPECT_EQ(MoebiusMap(Point::Zero(3))(w), -w);
}

TEST(Moebius, SwapsBaseAndOrigin) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Point z = random_point(2, rng);
    const MoebiusMap phi(z);
    EXPECT_LT((phi(Point::Zero(2)) - z).norm(), 1e-15);
    EXPECT_LT(phi(z).norm(), 1e-15);
  }
}

TEST(Moebius, InvolutionProperty) {
  Rng rng(4);
  for (int n : {1, 2, 3, 5})
    for (int k = 0; k < 500; ++k) {
      const Point z = random_point(n, rng, 0.95), w = random_point(n, rng, 0.95);
      const MoebiusMap phi(z);
      EXPECT_LT((phi(phi(w)) - w).norm(), 1e-12);
    }
}

TEST(Moebius, MapsBallIntoBall) {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const Point z = random_point(3, rng), w = random_point(3, rng);
    EXPECT_LT(MoebiusMap(z)(w).norm(), 1.0);
  }
}

TEST(Moebius, RejectsNonInteriorBase) {
  Point z(2);
  z << 1.0, 0.0;
  EXPECT_THROW(MoebiusMap{z}, PreconditionError);
}

TEST(Moebius, DimensionMismatchIsRejected) {
  EXPECT_THROW(MoebiusMap(Point::Zero(2))(Point::Zero(3)), PreconditionError);
}

TEST(Moebius, InnerAndNormIdentities) {
  Rng rng(6);
  for (int n : {2, 3})
    for (int k = 0; k < 2000; ++k) {
      const Point a = random_point(n, rng), z = random_point(n, rng), w = random_point(n, rng);
      const auto r = moebius_identity_residuals(a, z, w);
      EXPECT_LT(r.inner_identity, 1e-12);
      EXPECT_LT(r.norm_identity, 1e-12);
    }
}

TEST(Moebius, JacobianMatchesFiniteDifferences) {
  Rng rng(7);
  for (int n : {1, 2, 3})
    for (int k = 0; k < 30; ++k) {
      const Point z = random_point(n, rng, 0.9), w = random_point(n, rng, 0.9);
      const double fd = fd_real_jacobian_det(z, w);
      EXPECT_NEAR(moebius_jacobian_det(z, w) / fd, 1.0, 1e-6);
    }
}

TEST(PseudoDistance, SymmetricAndInvariant) {
  Rng rng(8);
  for (int k = 0; k < 1000; ++k) {
    const Point a = random_point(2, rng, 0.9), z = random_point(2, rng), w = random_point(2, rng);
    EXPECT_EQ(pseudo_distance(z, w), pseudo_distance(w, z));
    const MoebiusMap phi(a);
    EXPECT_NEAR(pseudo_distance(phi(z), phi(w)), pseudo_distance(z, w), 1e-11);
    EXPECT_NEAR(pseudo_distance(z, w), MoebiusMap(z)(w).norm(), 1e-12);
  }
}

TEST(PseudoDistance, OneDimensionalClosedForm) {
  Point z(1), w(1);
  z << cplx(0.3, 0.1);
  w << cplx(-0.2, 0.5);
  const double expected = std::abs((z[0] - w[0]) / (1.0 - z[0] * std::conj(w[0])));
  EXPECT_NEAR(pseudo_distance(z, w), expected, 1e-15);
  EXPECT_NEAR(hyperbolic_distance(z, w), std::atanh(expected), 1e-15);
}

TEST(PseudoDistance, CloseToBoundaryStaysAccurate) {
  Point z(1), w(1);
  z << 1.0 - 1e-9;
  w << 1.0 - 2e-9;
  // rho = (z-w)/(1-zw) with z,w real.
  const double a = 1.0 - 1e-9, b = 1.0 - 2e-9;
  const double expected = (a - b) / (1.0 - a * b);
  EXPECT_NEAR(pseudo_distance(z, w) / expected, 1.0, 1e-6);
}

TEST(HyperbolicBall, TrivialParameters) {
  const auto ball = ball_params(Point::Zero(2), 0.5);
  EXPECT_DOUBLE_EQ(ball.s, std::tanh(0.5));
  EXPECT_DOUBLE_EQ(ball.rho_ell, 1.0);
  EXPECT_EQ(ball.ellipsoid_center, Point::Zero(2));
  EXPECT_NEAR(ball_volume(Point::Zero(2), 0.5), std::pow(std::tanh(0.5), 4), 1e-15);
}

TEST(HyperbolicBall, MembershipAgreesWithDistance) {
  Rng rng(9);
  for (double r : {0.3, 1.0, 2.0})
    for (int k = 0; k < 200; ++k) {
      const Point z = random_point(3, rng, 0.95);
      const auto ball = ball_params(z, r);
      for (int j = 0; j < 20; ++j) {
        const Point w = random_point(3, rng);
        const double rho = pseudo_distance(z, w);
        if (std::abs(rho - ball.s) < 1e-9) continue;
        EXPECT_EQ(ball.contains(w), rho < ball.s);
      }
    }
}

TEST(HyperbolicBall, VolumeMatchesMonteCarlo) {
  Point z(2);
  z << 0.5, 0.0;
  const double r = 0.5;
  const auto ball = ball_params(z, r);
  Rng rng(10);
  const int count = 200000;
  int hits = 0;
  for (int k = 0; k < count; ++k) hits += ball.contains(sample_ball_uniform(2, rng));
  const double p = static_cast<double>(hits) / count;
  const double se = std::sqrt(p * (1 - p) / count);
  EXPECT_NEAR(ball_volume(z, r), p, 4 * se);
}

TEST(HyperbolicBall, RejectsNonPositiveRadius) { EXPECT_THROW(ball_params(Point::Zero(2), 0.0), PreconditionError); }

TEST(Alignment, MapsBaseToPositiveAxis) {
  Rng rng(12);
  for (int n : {1, 2, 4}) {
    const Point z = random_point(n, rng);
    const CMatrix u = align_to_first_axis(z);
    EXPECT_LT((u.adjoint() * u - CMatrix::Identity(n, n)).norm(), 1e-14);
    Point target = Point::Zero(n);
    target[0] = z.norm();
    EXPECT_LT((u * z - target).norm(), 1e-14);
  }
}

TEST(MoebiusGradient, ClosedFormAndTailVanishes) {
  Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    const Point z = random_point(3, rng, 0.9);
    const CVector g = grad_sq_moebius_at_zero(z);
    const double r = z.norm();
    EXPECT_NEAR(g[0].real(), r * (r * r - 1.0), 1e-15);
    EXPECT_EQ(g[0].imag(), 0.0);
    EXPECT_EQ(g[1], cplx(0.0));
    EXPECT_EQ(g[2], cplx(0.0));
  }
}

TEST(MoebiusGradient, MatchesCentralDifferences) {
  Rng rng(14);
  for (int k = 0; k < 30; ++k) {
    const Point z = random_point(2, rng, 0.9);
    const CMatrix u = align_to_first_axis(z);
    const Point za = u * z;  // aligned base
    const MoebiusMap phi(za);
    const CVector g = grad_sq_moebius_at_zero(z);
    const double h = 1e-5;
    for (int i = 0; i < 2; ++i) {
      Point ex = Point::Zero(2), ey = Point::Zero(2);
      ex[i] = h;
      ey[i] = cplx(0, h);
      const double dx = (phi(ex).squaredNorm() - phi(-ex).squaredNorm()) / (2 * h);
      const double dy = (phi(ey).squaredNorm() - phi(-ey).squaredNorm()) / (2 * h);
      const cplx wirtinger = 0.5 * cplx(dx, -dy);
      EXPECT_LT(std::abs(wirtinger - g[i]), 1e-6);
    }
  }
}

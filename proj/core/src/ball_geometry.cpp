#include "bergmod/ball_geometry.hpp"

#include <cmath>

namespace bergmod {

MoebiusMap::MoebiusMap(Point base) : base_(std::move(base)) {
  require_interior(base_, "MoebiusMap");
  base_norm_sq_ = base_.squaredNorm();
  sqrt_defect_ = std::sqrt(1.0 - base_norm_sq_);
}

Point MoebiusMap::operator()(const Point& w) const {
  require_same_dim(base_, w, "moebius_apply");
  const cplx wz = inner(w, base_);
  const cplx den = 1.0 - wz;
  if (std::abs(den) < 1e-14)
    throw AdmissibilityError("moebius_apply: |1 - <w,z>| below 1e-14");
  if (base_norm_sq_ == 0.0) return -w;
  const Point pw = base_ * (wz / base_norm_sq_);
  const Point qw = w - pw;
  return (base_ - pw - sqrt_defect_ * qw) / den;
}

Point moebius_apply(const MoebiusMap& map, const Point& w) { return map(w); }

IdentityResiduals moebius_identity_residuals(const Point& a, const Point& z, const Point& w) {
  require_interior(a, "moebius_identity_residuals");
  require_interior(z, "moebius_identity_residuals");
  require_interior(w, "moebius_identity_residuals");
  const MoebiusMap phi(a);
  const Point pz = phi(z);
  const Point pw = phi(w);

  const cplx lhs1 = 1.0 - inner(pz, pw);
  const cplx rhs1 = (1.0 - inner(a, a)) * (1.0 - inner(z, w)) /
                    ((1.0 - inner(z, a)) * (1.0 - inner(a, w)));
  const double lhs2 = 1.0 - pz.squaredNorm();
  const double rhs2 = (1.0 - a.squaredNorm()) * (1.0 - z.squaredNorm()) /
                      std::norm(1.0 - inner(z, a));
  return {std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)};
}

double moebius_jacobian_det(const Point& z, const Point& w) {
  require_interior(z, "moebius_jacobian_det");
  require_same_dim(z, w, "moebius_jacobian_det");
  const int n = static_cast<int>(z.size());
  const double num = std::pow(1.0 - z.squaredNorm(), n + 1);
  const double den = std::pow(std::norm(1.0 - inner(w, z)), n + 1);
  return num / den;
}

double pseudo_distance(const Point& z, const Point& w) {
  require_same_dim(z, w, "pseudo_distance");
  // 1 - rho^2 = (1-|z|^2)(1-|w|^2)/|1-<z,w>|^2 rearranges to
  //   rho^2 = (|d|^2 - |m ^ d|^2) / |1-<z,w>|^2,  d = w - z, m = (z+w)/2,
  // where |m ^ d|^2 = sum_{i<j} |m_i d_j - m_j d_i|^2. Swapping z and w
  // negates d exactly and leaves m unchanged.
  const CVector d = w - z;
  const CVector m = 0.5 * (z + w);
  double wedge = 0.0;
  for (Eigen::Index i = 0; i < d.size(); ++i)
    for (Eigen::Index j = i + 1; j < d.size(); ++j) wedge += std::norm(m[i] * d[j] - m[j] * d[i]);
  const double num = d.squaredNorm() - wedge;
  if (num <= 0.0) return 0.0;
  const double rho = std::sqrt(num / std::norm(1.0 - inner(z, w)));
  return std::min(rho, 1.0);
}

double hyperbolic_distance(const Point& z, const Point& w) {
  const double rho = pseudo_distance(z, w);
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  return std::atanh(rho);
}

bool HyperbolicBall::contains(const Point& w) const {
  require_same_dim(center, w, "HyperbolicBall::contains");
  const double zz = center.squaredNorm();
  if (zz == 0.0) return w.squaredNorm() < s * s;
  const cplx coeff = inner(w, center) / zz;
  const CVector pw = center * coeff;
  const CVector qw = w - pw;
  const double axial = (pw - ellipsoid_center).squaredNorm() / (axial_radius * axial_radius);
  const double transverse = qw.squaredNorm() / (transverse_radius * transverse_radius);
  return axial + transverse < 1.0;
}

HyperbolicBall ball_params(const Point& z, double r) {
  require_interior(z, "ball_params");
  if (!(r > 0.0)) throw PreconditionError("ball_params: radius must be positive");
  HyperbolicBall b;
  b.center = z;
  b.radius = r;
  b.s = std::tanh(r);
  const double s2 = b.s * b.s;
  const double zz = z.squaredNorm();
  b.ellipsoid_center = z * ((1.0 - s2) / (1.0 - s2 * zz));
  b.rho_ell = (1.0 - zz) / (1.0 - s2 * zz);
  b.axial_radius = b.s * b.rho_ell;
  b.transverse_radius = b.s * std::sqrt(b.rho_ell);
  return b;
}

double ball_volume(const Point& z, double r) {
  const HyperbolicBall b = ball_params(z, r);
  const int n = static_cast<int>(z.size());
  return std::pow(b.s, 2 * n) * std::pow(b.rho_ell, n + 1);
}

CMatrix align_to_first_axis(const Point& z) {
  const Eigen::Index n = z.size();
  CMatrix u = CMatrix::Identity(n, n);
  const double nz = z.norm();
  if (nz == 0.0) return u;
  const CVector v = z / nz;
  const double a1 = std::abs(v[0]);
  const cplx phase = a1 > 0.0 ? v[0] / a1 : cplx(1.0);
  CVector h = v;
  h[0] += phase;  // h = v + phase e_1, never small
  const CMatrix reflector = CMatrix::Identity(n, n) - (2.0 / h.squaredNorm()) * h * h.adjoint();
  // reflector * v = -phase e_1
  u = (-std::conj(phase)) * reflector;
  return u;
}

CVector grad_sq_moebius_at_zero(const Point& z) {
  require_interior(z, "grad_sq_moebius_at_zero");
  // In the aligned basis z = (|z|, 0, ..., 0), and the gradient of |phi_z|^2
  // at the origin is -(1-|z|^2) conj(z).
  const double nz = z.norm();
  CVector g = CVector::Zero(z.size());
  if (z.size() > 0) g[0] = nz * (nz * nz - 1.0);
  return g;
}

}  // namespace bergmod

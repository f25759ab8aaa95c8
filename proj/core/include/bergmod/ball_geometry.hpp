#pragma once

#include <utility>

#include "bergmod/common.hpp"

namespace bergmod {

// The involutive automorphism phi_z of the unit ball exchanging 0 and z.
//   phi_z(w) = (z - P_z w - sqrt(1-|z|^2) Q_z w) / (1 - <w,z>)
// P_z is the orthogonal projection onto C z (the zero map when z = 0, which
// makes phi_0 = -identity) and Q_z = I - P_z.
class MoebiusMap {
 public:
  explicit MoebiusMap(Point base);

  const Point& base() const { return base_; }
  int dim() const { return static_cast<int>(base_.size()); }

  // Throws AdmissibilityError if |1 - <w,z>| < 1e-14.
  Point operator()(const Point& w) const;

 private:
  Point base_;
  double base_norm_sq_;
  double sqrt_defect_;  // sqrt(1-|z|^2)
};

Point moebius_apply(const MoebiusMap& map, const Point& w);

struct IdentityResiduals {
  double inner_identity;  // 1-<phi_a z, phi_a w> against its closed form
  double norm_identity;   // the w = z specialization
};

IdentityResiduals moebius_identity_residuals(const Point& a, const Point& z, const Point& w);

// (1-|z|^2)^{n+1} / |1-<w,z>|^{2(n+1)}; the real Jacobian determinant of phi_z at w.
double moebius_jacobian_det(const Point& z, const Point& w);

// rho(z,w) = |phi_z(w)|, evaluated through a cancellation-free symmetric
// expression so that rho(z,w) and rho(w,z) agree bit for bit.
double pseudo_distance(const Point& z, const Point& w);

// beta = atanh(rho).
double hyperbolic_distance(const Point& z, const Point& w);

// D(z,r) = {w : beta(z,w) < r}, stored as its Euclidean ellipsoid.
struct HyperbolicBall {
  Point center;
  double radius = 0.0;            // hyperbolic radius r
  double s = 0.0;                 // tanh r
  Point ellipsoid_center;         // (1-s^2) z / (1-s^2|z|^2)
  double rho_ell = 1.0;           // (1-|z|^2) / (1-s^2|z|^2)
  double axial_radius = 0.0;      // s * rho_ell
  double transverse_radius = 0.0; // s * sqrt(rho_ell)

  // Ellipsoid membership test.
  bool contains(const Point& w) const;
};

HyperbolicBall ball_params(const Point& z, double r);

// Normalized volume s^{2n} rho_ell^{n+1}.
double ball_volume(const Point& z, double r);

// Unitary U (a phase-corrected Householder reflection) with U z = |z| e_1.
CMatrix align_to_first_axis(const Point& z);

// Holomorphic gradient of w -> |phi_z(w)|^2 at w = 0, expressed in the basis
// where z = (|z|, 0, ..., 0). Entries 2..n are exactly zero.
CVector grad_sq_moebius_at_zero(const Point& z);

}  // namespace bergmod

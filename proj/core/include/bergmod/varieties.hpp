#pragma once

#include <variant>
#include <vector>

#include "bergmod/common.hpp"
#include "bergmod/polynomial.hpp"

namespace bergmod {

// A complex subspace of C^n given by an orthonormal basis (n x d).
class LinearVariety {
 public:
  // Throws PreconditionError unless the columns are orthonormal within 1e-12.
  explicit LinearVariety(CMatrix basis);

  // Orthonormal basis of the column span of `vectors` (n x k), using the
  // relative singular-value cutoff.
  static LinearVariety span(const CMatrix& vectors);
  static LinearVariety zero(int n);
  static LinearVariety full(int n);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const CMatrix& basis() const { return basis_; }

  CVector project(const CVector& v) const { return basis_ * (basis_.adjoint() * v); }
  // ||(I - M) p||
  double residual(const Point& p) const;
  // Largest ||(I - M) b|| over the orthonormal columns of `other`.
  double containment_residual(const LinearVariety& other) const;

 private:
  CMatrix basis_;
};

class AffineVariety {
 public:
  AffineVariety(Point base, LinearVariety direction);

  const Point& base() const { return base_; }
  const LinearVariety& direction() const { return direction_; }
  int ambient_dim() const { return direction_.ambient_dim(); }
  int dim() const { return direction_.dim(); }
  double residual(const Point& p) const;
  // Point of the affine space closest to the origin.
  Point closest_point() const;

 private:
  Point base_;
  LinearVariety direction_;
};

// { U (w', F(w')) : w' in C^d } with F : C^d -> C^{n-d} polynomial and U a
// unitary chart of C^n.
class GraphVariety {
 public:
  GraphVariety(int d, std::vector<Polynomial> components, CMatrix chart);
  GraphVariety(int d, std::vector<Polynomial> components);  // identity chart

  int ambient_dim() const { return static_cast<int>(chart_.rows()); }
  int dim() const { return d_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const CMatrix& chart() const { return chart_; }

  CVector evaluate(const CVector& wprime) const;
  // (n-d) x d matrix of partial derivatives dF_i/dw_j.
  CMatrix jacobian(const CVector& wprime) const;
  Point point(const CVector& wprime) const;
  // Free coordinates w' of an ambient point.
  CVector free_coords(const Point& p) const;
  double residual(const Point& p) const;

 private:
  int d_;
  std::vector<Polynomial> components_;
  std::vector<std::vector<Polynomial>> partials_;
  CMatrix chart_;
};

using Variety = std::variant<LinearVariety, AffineVariety, GraphVariety>;

int ambient_dim(const Variety& v);
int intrinsic_dim(const Variety& v);
double variety_residual(const Variety& v, const Point& p);
const char* variety_kind(const Variety& v);

class BoundaryPoint {
 public:
  // Throws PreconditionError unless ||x| - 1| < 1e-10.
  explicit BoundaryPoint(Point coords);
  const Point& coords() const { return coords_; }

 private:
  Point coords_;
};

CMatrix projection_matrix(const LinearVariety& v);

LinearVariety subspace_intersection(const LinearVariety& v1, const LinearVariety& v2);

// Principal angles between V1 (-) modulo and V2 (-) modulo, ascending. Small
// angles come from sines and large ones from cosines for full accuracy.
std::vector<double> principal_angles(const LinearVariety& v1, const LinearVariety& v2,
                                     const LinearVariety& modulo);

// Largest principal angle when the dimensions agree, pi/2 otherwise.
double subspace_gap(const LinearVariety& a, const LinearVariety& b);

// Tangent space at p. Throws NotOnVarietyError if p is off the variety.
LinearVariety tangent_space(const GraphVariety& v, const Point& p);
LinearVariety tangent_space(const Variety& v, const Point& p);

struct Transversality {
  double score = 0.0;
  bool transversal = false;
};

// score = ||P_T x||. A complex subspace sits inside the real tangent space of
// the sphere at x exactly when it is complex-orthogonal to x.
Transversality sphere_transversality(const LinearVariety& t, const BoundaryPoint& x);

struct CleanIntersection {
  bool clean = false;
  double gap = 0.0;
  int intersection_dim = 0;
  int expected_dim = 0;
};

CleanIntersection clean_intersection_check(const LinearVariety& t1, const LinearVariety& t2,
                                           const LinearVariety& t3);

// (T_x V cap x^perp) + C x. Refuses boundary points where V is not
// transversal to the sphere.
LinearVariety localize(const Variety& v, const BoundaryPoint& x);

struct TangentialWitness {
  Point w_r;
  Point image;  // phi_{r x}(w_r)
  double rho = 0.0;
};

// Witness for the tangential affine pair {z_2 = 0} and {(t, slope (t-1))}
// meeting at x = (1, 0): w_r = (r, slope (r-1)).
TangentialWitness tangential_pair_witness(cplx slope, double r);

}  // namespace bergmod

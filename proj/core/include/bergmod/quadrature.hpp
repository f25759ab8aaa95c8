#pragma once

#include <vector>

#include "bergmod/common.hpp"

namespace bergmod {

struct GaussRule {
  std::vector<double> nodes;    // on [0,1]
  std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre rule with `count` nodes mapped to [0,1].
GaussRule gauss_legendre(int count);

// Resolution of a tensor polar grid on B_d: `radial` Gauss nodes in |t|^2 (and
// in each collapsed simplex coordinate), `angular` equispaced phases per
// coordinate.
struct PolarGrid {
  int radial = 32;
  int angular = 64;
};

struct BallQuadrature {
  std::vector<CVector> nodes;
  std::vector<double> weights;  // normalized volume, sum to 1
};

// Quadrature for the normalized volume measure of B_d written in polar
// coordinates s_j = |t_j|^2, theta_j = arg t_j:
//   dv_d = d! / (2 pi)^d  prod_j ds_j dtheta_j,  s in the simplex.
// Exact for polynomials in |t_j|^2 of modest degree and trigonometric
// polynomials of degree below `angular`.
BallQuadrature ball_quadrature(int d, const PolarGrid& grid);

}  // namespace bergmod

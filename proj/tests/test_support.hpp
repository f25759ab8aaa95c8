#pragma once

#include <cmath>

#include "bergmod/bergman.hpp"
#include "bergmod/common.hpp"
#include "bergmod/rng.hpp"

namespace bergmod::test {

// Uniform point in the ball of radius `radius` in C^n.
inline Point random_point(int n, Rng& rng, double radius = 1.0) { return sample_ball_uniform(n, rng) * radius; }

inline Point random_unit(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Point p(n);
  for (int i = 0; i < n; ++i) p[i] = cplx(g(rng), g(rng));
  return p / p.norm();
}

inline CMatrix random_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g;
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

// Brute-force inner product sum_i a_i conj(b_i), written independently of the library.
inline cplx brute_inner(const CVector& a, const CVector& b) {
  cplx s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

}  // namespace bergmod::test

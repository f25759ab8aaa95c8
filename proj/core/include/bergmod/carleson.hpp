#pragma once

#include <string>
#include <vector>

#include "bergmod/bergman.hpp"
#include "bergmod/common.hpp"
#include "bergmod/measure.hpp"

namespace bergmod {

inline const std::vector<double> kDefaultShells = {0.0, 0.5, 0.9, 0.99};

// Shells of radii `shells` times a direction net of 2n^2 unit vectors
// exp(2 pi i k / (2n)) e_j; the zero shell contributes the origin once.
std::vector<Point> default_zgrid(int n, const std::vector<double>& shells = kDefaultShells);

// int (1-|z|^2)^{n+1} / |1-<w,z>|^{2(n+1)} dnu(w) at a single z.
double carleson_kernel_integral(const WeightedPointMeasure& nu, const Point& z);

// Condition (1): max over zgrid of the kernel integral.
double carleson_kernel_sup(const WeightedPointMeasure& nu, const std::vector<Point>& zgrid);

// nu(D(z,r)) / v(D(z,r)) at a single z.
double carleson_ball_ratio(const WeightedPointMeasure& nu, const Point& z, double r);

// Condition (3): max over zgrid of the ball ratio.
double carleson_ratio_sup(const WeightedPointMeasure& nu, double r, const std::vector<Point>& zgrid);

// int |f|^2 dnu / ||f||^2 for one function with a known norm.
double embedding_ratio(const WeightedPointMeasure& nu, const SampledFunction& f);

// Condition (2): max over the corpus. Every member needs a known norm.
double carleson_embedding_check(const WeightedPointMeasure& nu, const std::vector<SampledFunction>& corpus);

// Monomials z^alpha with |alpha| <= degree in n variables.
std::vector<SampledFunction> monomial_corpus(int n, int degree);

enum class TrendVerdict { Stable, Growing, Inconclusive };
const char* to_string(TrendVerdict v);

// Stable: the last rung exceeds its predecessor by at most 25%. Growing: the
// values strictly increase and the last is at least twice the first.
TrendVerdict trend_verdict(const std::vector<double>& rungs);

struct CarlesonReport {
  int dim = 0;
  double r = 1.0;
  std::vector<double> shells;
  std::size_t directions = 0;
  std::size_t measure_points = 0;
  double measure_mass = 0.0;
  std::size_t corpus_size = 0;

  // Values on the full grid.
  double sup_kernel = 0.0;
  double sup_ratio = 0.0;
  double embedding_ratio = 0.0;

  // One entry per ladder rung (prefix of the shells, starting with two).
  std::vector<std::vector<double>> rung_shells;
  std::vector<double> kernel_rungs, ratio_rungs, embedding_rungs;
  TrendVerdict kernel_verdict = TrendVerdict::Inconclusive;
  TrendVerdict ratio_verdict = TrendVerdict::Inconclusive;
  TrendVerdict embedding_verdict = TrendVerdict::Inconclusive;
  std::string verdict;  // "carleson", "not-carleson", "inconclusive"
};

// Runs all three tests on the shell ladder. The embedding corpus at each rung
// is `corpus` plus the normalized kernels k_z for z in that rung's grid.
CarlesonReport carleson_ladder(const WeightedPointMeasure& nu, double r, const std::vector<SampledFunction>& corpus,
                               const std::vector<double>& shells = kDefaultShells);

}  // namespace bergmod

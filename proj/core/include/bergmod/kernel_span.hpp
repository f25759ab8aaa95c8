#pragma once

#include <cstdint>
#include <vector>

#include "bergmod/bergman.hpp"
#include "bergmod/common.hpp"
#include "bergmod/measure.hpp"
#include "bergmod/quadrature.hpp"
#include "bergmod/varieties.hpp"

namespace bergmod {

enum class SampleScheme { Stratified, SeparatedNet };

struct SamplePlan {
  std::size_t count = 200;
  double rho_max = 0.95;
  SampleScheme scheme = SampleScheme::Stratified;
  double separation = 0.0;  // pseudo-hyperbolic delta for SeparatedNet
  std::uint64_t seed = 1;

  void validate() const;
};

// Points on V with |lambda| <= rho_max.
//
// Stratified: a randomly shifted Halton stream mapped through the slice
// measure (1-|t|^2)^{n-d} dv_d of the chart, so a run with m points is a
// prefix of the run with 2m points. Graph charts reject points outside
// rho_max. SeparatedNet: greedy acceptance over the same stream; throws
// InfeasibleError carrying the achieved count when m points cannot be found.
std::vector<Point> sample_variety(const Variety& v, const SamplePlan& plan);

// Finite model of a quotient module: the span of K_lambda over sample points.
//
// The raw Gram G_jk = <K_k, K_j> is kept as is. Whitening goes through the
// normalized Gram D^{-1} G D^{-1}, D = diag ||K_lambda||, whose eigenvalues
// below tau * lambda_max are dropped; W = D^{-1} U_r Lambda_r^{-1/2} then
// satisfies W^* G W = I on the retained range.
class KernelSpan {
 public:
  KernelSpan(std::vector<Point> points, double tau);

  int ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return points_.size(); }
  int rank() const { return static_cast<int>(eigenvalues_.size()); }
  double cutoff() const { return tau_; }

  const std::vector<Point>& points() const { return points_; }
  const CMatrix& gram() const { return gram_; }
  const CMatrix& normalized_gram() const { return normalized_gram_; }
  const RVector& kernel_norms() const { return kernel_norms_; }
  const RVector& eigenvalues() const { return eigenvalues_; }
  const CMatrix& eigenvectors() const { return eigenvectors_; }
  CMatrix whitening() const;

  // max |(W^* G W - I)_{jk}|, evaluated on the normalized Gram.
  double whitening_residual() const;

 private:
  int ambient_dim_;
  double tau_;
  std::vector<Point> points_;
  CMatrix gram_;
  CMatrix normalized_gram_;
  RVector kernel_norms_;
  RVector eigenvalues_;   // retained, descending
  CMatrix eigenvectors_;  // matching columns
};

// Gram (raw and normalized) of the kernels at `points`; rows are assembled in
// parallel.
CMatrix kernel_gram(const std::vector<Point>& points);
CMatrix normalized_kernel_gram(const std::vector<Point>& points);

KernelSpan build_span(std::vector<Point> points, double tau = kRankCutoff);

struct Projection {
  CVector coefficients;  // on the kernels K_lambda, lambda in the span points
  SampledFunction evaluator;
  double norm = 0.0;
};

// Least-norm interpolant of f on the span points.
Projection project(const KernelSpan& span, const SampledFunction& f);

// w -> f(M w) for the orthogonal projection M onto V.
SampledFunction project_oracle_linear(const LinearVariety& v, const SampledFunction& f);

// binom(n, d): the c making c (1-|t|^2)^{n-d} dv_d a probability measure.
double equivalent_measure_constant(int n, int d);

// Quadrature discretization of c (1-|z|^2)^{n-d} dv_d on V cap B_n, with c set
// by the discrete total mass (1 up to rounding).
WeightedPointMeasure equivalent_measure(const LinearVariety& v, const PolarGrid& grid);

}  // namespace bergmod

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "bergmod/common.hpp"
#include "bergmod/polynomial.hpp"
#include "bergmod/rng.hpp"

namespace bergmod {

// K_z(w) = 1 / (1 - <w,z>)^{n+1}.
cplx kernel_value(const Point& z, const Point& w);

// ||K_z||^2 = K_z(z) = (1-|z|^2)^{-(n+1)}.
double kernel_norm_sq(const Point& z);

// <K_lambda, K_eta> = K_lambda(eta).
cplx kernel_inner(const Point& lambda, const Point& eta);

// ||k_z - k_w|| for the normalized kernels k = K / ||K||.
double normalized_kernel_distance(const Point& z, const Point& w);

// A holomorphic function on B_n given by an evaluator, optionally carrying an
// exact monomial form and a known squared Bergman norm.
class SampledFunction {
 public:
  using Evaluator = std::function<cplx(const Point&)>;

  SampledFunction(int dim, Evaluator eval, std::string label = {});

  static SampledFunction from_polynomial(Polynomial p, std::string label = {});
  static SampledFunction kernel(const Point& z);
  static SampledFunction normalized_kernel(const Point& z);

  cplx operator()(const Point& w) const { return (*eval_)(w); }

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const std::optional<Polynomial>& polynomial() const { return poly_; }
  std::optional<int> degree_bound() const;

  // Squared Bergman norm: exact from the monomial form when present,
  // otherwise whatever was attached with with_norm_sq.
  std::optional<double> norm_sq() const;
  SampledFunction with_norm_sq(double value) const;

 private:
  int dim_;
  std::shared_ptr<const Evaluator> eval_;
  std::optional<Polynomial> poly_;
  std::optional<double> norm_sq_;
  std::string label_;
};

struct McEstimate {
  cplx value;
  double std_error = 0.0;
  std::size_t count = 0;
};

// Uniform point in B_n: radius u^{1/(2n)}, direction a normalized complex Gaussian.
Point sample_ball_uniform(int n, Rng& rng);

// Monte Carlo estimate of the normalized-volume integral of f over B_n.
// Samples are split over a fixed number of shards with seeds derived from
// `seed`, so the result does not depend on the worker count.
McEstimate mc_integrate_ball(const SampledFunction& f, std::size_t count, std::uint64_t seed);

// (U_z f)(w) = f(phi_z(w)) k_z(w).
SampledFunction u_z_apply(const Point& z, const SampledFunction& f);

struct OscillationSides {
  double lhs = 0.0;  // |g(z) - g(w)|^2
  double rhs = 0.0;  // rho(z,w)^2 / (1-|w|^2)^{d+1} * int_{D(w,1)} |g|^2 dv
};

// Both sides of the oscillation estimate with the constant left out. The
// integral over the unit hyperbolic ball is computed by Monte Carlo after the
// change of variables eta = phi_w(zeta).
OscillationSides oscillation_check(const SampledFunction& g, const Point& z, const Point& w, int d,
                                   std::size_t samples = 4096, std::uint64_t seed = 0x05c111a7e);

}  // namespace bergmod

#include "bergmod/bergman.hpp"

#include <cmath>
#include <vector>

#include "bergmod/ball_geometry.hpp"
#include "bergmod/parallel.hpp"

namespace bergmod {

namespace {

cplx ipow(cplx base, int e) {
  cplx r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

constexpr std::size_t kMcShards = 64;

}  // namespace

cplx kernel_value(const Point& z, const Point& w) {
  require_same_dim(z, w, "kernel_value");
  const int n = static_cast<int>(z.size());
  return 1.0 / ipow(1.0 - inner(w, z), n + 1);
}

double kernel_norm_sq(const Point& z) {
  require_interior(z, "kernel_norm_sq");
  return std::pow(1.0 - z.squaredNorm(), -(static_cast<int>(z.size()) + 1));
}

cplx kernel_inner(const Point& lambda, const Point& eta) {
  require_interior(lambda, "kernel_inner");
  require_interior(eta, "kernel_inner");
  return kernel_value(lambda, eta);
}

double normalized_kernel_distance(const Point& z, const Point& w) {
  require_interior(z, "normalized_kernel_distance");
  require_interior(w, "normalized_kernel_distance");
  // <k_z,k_w> = q^{n+1} with q = sqrt((1-|z|^2)(1-|w|^2)) / (1-<w,z>) and
  // |q|^2 = 1 - rho^2. Split 1 - Re q^{n+1} into a modulus part and a phase
  // part so that nearby points do not lose all digits.
  const int n = static_cast<int>(z.size());
  const double p = 0.5 * (n + 1);
  const double rho = pseudo_distance(z, w);
  const double theta = -std::arg(1.0 - inner(w, z));
  const double modulus_part = -std::expm1(p * std::log1p(-rho * rho));
  const double mod_q = std::exp(p * std::log1p(-rho * rho));
  const double half = std::sin(0.5 * (n + 1) * theta);
  const double one_minus_re = modulus_part + mod_q * 2.0 * half * half;
  return std::sqrt(std::max(0.0, 2.0 * one_minus_re));
}

SampledFunction::SampledFunction(int dim, Evaluator eval, std::string label)
    : dim_(dim), eval_(std::make_shared<const Evaluator>(std::move(eval))), label_(std::move(label)) {}

SampledFunction SampledFunction::from_polynomial(Polynomial p, std::string label) {
  auto shared = std::make_shared<const Polynomial>(p);
  SampledFunction f(p.num_vars(), [shared](const Point& w) { return (*shared)(w); }, std::move(label));
  f.poly_ = std::move(p);
  return f;
}

SampledFunction SampledFunction::kernel(const Point& z) {
  require_interior(z, "SampledFunction::kernel");
  SampledFunction f(static_cast<int>(z.size()), [z](const Point& w) { return kernel_value(z, w); }, "K_z");
  f.norm_sq_ = kernel_norm_sq(z);
  return f;
}

SampledFunction SampledFunction::normalized_kernel(const Point& z) {
  require_interior(z, "SampledFunction::normalized_kernel");
  const double scale = std::pow(1.0 - z.squaredNorm(), 0.5 * (static_cast<double>(z.size()) + 1));
  SampledFunction f(static_cast<int>(z.size()),
                    [z, scale](const Point& w) { return scale * kernel_value(z, w); }, "k_z");
  f.norm_sq_ = 1.0;
  return f;
}

std::optional<int> SampledFunction::degree_bound() const {
  if (poly_) return poly_->degree();
  return std::nullopt;
}

std::optional<double> SampledFunction::norm_sq() const {
  if (poly_) return poly_->bergman_norm_sq();
  return norm_sq_;
}

SampledFunction SampledFunction::with_norm_sq(double value) const {
  SampledFunction f = *this;
  f.norm_sq_ = value;
  return f;
}

Point sample_ball_uniform(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Point p(n);
  double nn = 0.0;
  do {
    for (int i = 0; i < n; ++i) p[i] = cplx(gauss(rng), gauss(rng));
    nn = p.norm();
  } while (nn == 0.0);
  const double radius = std::pow(uniform01(rng), 1.0 / (2.0 * n));
  return p * (radius / nn);
}

McEstimate mc_integrate_ball(const SampledFunction& f, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw PreconditionError("mc_integrate_ball: count must be at least 1");
  const std::size_t shards = std::min(kMcShards, count);
  struct Partial {
    cplx sum = 0.0;
    double sum_sq = 0.0;
  };
  std::vector<Partial> partial(shards);
  parallel_for(shards, [&](std::size_t s) {
    const std::size_t begin = count * s / shards;
    const std::size_t end = count * (s + 1) / shards;
    Rng rng(derive_seed(seed, s));
    Partial acc;
    for (std::size_t k = begin; k < end; ++k) {
      const cplx v = f(sample_ball_uniform(f.dim(), rng));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NumericalError("mc_integrate_ball: non-finite integrand value");
      acc.sum += v;
      acc.sum_sq += std::norm(v);
    }
    partial[s] = acc;
  });
  cplx sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& p : partial) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const double nd = static_cast<double>(count);
  McEstimate est;
  est.count = count;
  est.value = sum / nd;
  if (count > 1) {
    const double var = std::max(0.0, (sum_sq - nd * std::norm(est.value)) / (nd - 1.0));
    est.std_error = std::sqrt(var / nd);
  }
  return est;
}

SampledFunction u_z_apply(const Point& z, const SampledFunction& f) {
  require_interior(z, "u_z_apply");
  if (z.size() != f.dim()) throw PreconditionError("u_z_apply: dimension mismatch");
  const MoebiusMap phi(z);
  const SampledFunction kz = SampledFunction::normalized_kernel(z);
  SampledFunction out(f.dim(), [phi, kz, f](const Point& w) { return f(phi(w)) * kz(w); }, "U_z f");
  if (auto nsq = f.norm_sq()) out = out.with_norm_sq(*nsq);
  return out;
}

OscillationSides oscillation_check(const SampledFunction& g, const Point& z, const Point& w, int d,
                                   std::size_t samples, std::uint64_t seed) {
  if (z.size() != d || w.size() != d || g.dim() != d)
    throw PreconditionError("oscillation_check: dimension mismatch");
  require_interior(z, "oscillation_check");
  require_interior(w, "oscillation_check");
  if (!(hyperbolic_distance(z, w) < 0.5))
    throw PreconditionError("oscillation_check: requires beta(z,w) < 1/2");

  OscillationSides out;
  out.lhs = std::norm(g(z) - g(w));

  // int_{D(w,1)} |g|^2 dv = int_{|zeta|<s} |g(phi_w zeta)|^2 J_w(zeta) dv(zeta),
  // with J_w(zeta) = (1-|w|^2)^{d+1} / |1-<zeta,w>|^{2(d+1)}. The (1-|w|^2)^{d+1}
  // factor cancels against the normalization of the right-hand side.
  const double s = std::tanh(1.0);
  const double volume = std::pow(s, 2 * d);
  const MoebiusMap phi(w);
  Rng rng(seed);
  double acc = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const Point zeta = s * sample_ball_uniform(d, rng);
    acc += std::norm(g(phi(zeta))) / std::pow(std::norm(1.0 - inner(zeta, w)), d + 1);
  }
  const double rho = pseudo_distance(z, w);
  out.rhs = rho * rho * volume * acc / static_cast<double>(samples);
  return out;
}

}  // namespace bergmod

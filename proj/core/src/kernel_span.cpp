#include "bergmod/kernel_span.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include <boost/math/special_functions/beta.hpp>

#include "bergmod/ball_geometry.hpp"
#include "bergmod/parallel.hpp"
#include "bergmod/rng.hpp"

namespace bergmod {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

cplx ipow(cplx base, int e) {
  cplx r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

// Point of the d-ball of radius `radius` from 2d uniforms. s = |t|^2 follows
// the slice density s^{d-1} (1-s)^k on [0, radius^2], the split of s over
// coordinates is uniform on the simplex, and the phases are uniform.
CVector slice_point(const std::vector<double>& u, int d, int k, double radius) {
  const double r2 = radius * radius;
  const double top = boost::math::ibeta(static_cast<double>(d), static_cast<double>(k + 1), r2);
  const double s = boost::math::ibeta_inv(static_cast<double>(d), static_cast<double>(k + 1), u[0] * top);
  std::vector<double> x(static_cast<std::size_t>(d));
  double rem = 1.0;
  for (int j = 0; j + 1 < d; ++j) {
    x[j] = rem * (1.0 - std::pow(u[1 + j], 1.0 / (d - 1 - j)));
    rem -= x[j];
  }
  x[d - 1] = std::max(0.0, rem);
  CVector t(d);
  for (int j = 0; j < d; ++j) t[j] = std::polar(std::sqrt(s * x[j]), 2.0 * std::numbers::pi * u[d + j]);
  return t;
}

// Candidate stream over a variety; next() returns false when a candidate is
// rejected (graph points outside rho_max).
class CandidateStream {
 public:
  CandidateStream(const Variety& v, const SamplePlan& plan)
      : variety_(v), plan_(plan), halton_(std::max(2, 2 * intrinsic_dim(v)), plan.seed) {
    n_ = ambient_dim(v);
    d_ = intrinsic_dim(v);
    if (const auto* a = std::get_if<AffineVariety>(&v)) {
      c0_ = a->closest_point();
      const double c0sq = c0_.squaredNorm();
      if (!(c0sq < plan.rho_max * plan.rho_max))
        throw InfeasibleError("sample_variety: affine variety does not meet the ball of radius rho_max", 0);
      scale_ = std::sqrt(1.0 - c0sq);
      inner_radius_ = std::sqrt(plan.rho_max * plan.rho_max - c0sq) / scale_;
    }
  }

  bool next(Point& out) {
    const std::vector<double> u = halton_.at(++index_);
    return std::visit(
        Overloaded{[&](const LinearVariety& x) {
                     out = x.basis() * slice_point(u, d_, n_ - d_, plan_.rho_max);
                     return true;
                   },
                   [&](const AffineVariety& x) {
                     out = c0_ + scale_ * (x.direction().basis() * slice_point(u, d_, n_ - d_, inner_radius_));
                     return true;
                   },
                   [&](const GraphVariety& x) {
                     out = x.point(slice_point(u, d_, n_ - d_, plan_.rho_max));
                     return out.norm() <= plan_.rho_max;
                   }},
        variety_);
  }

 private:
  const Variety& variety_;
  const SamplePlan& plan_;
  ShiftedHalton halton_;
  std::uint64_t index_ = 0;
  int n_ = 0, d_ = 0;
  Point c0_;
  double scale_ = 1.0, inner_radius_ = 0.0;
};

}  // namespace

void SamplePlan::validate() const {
  if (count < 1) throw PreconditionError("SamplePlan: count must be at least 1");
  if (!(rho_max > 0.0 && rho_max < 1.0)) throw PreconditionError("SamplePlan: rho_max must lie in (0,1)");
  if (scheme == SampleScheme::SeparatedNet && !(separation > 0.0 && separation < 1.0))
    throw PreconditionError("SamplePlan: separation must lie in (0,1)");
}

std::vector<Point> sample_variety(const Variety& v, const SamplePlan& plan) {
  plan.validate();
  if (intrinsic_dim(v) == 0) {
    // A zero-dimensional variety meets the ball in a single point.
    Point p = std::visit(Overloaded{[](const LinearVariety& x) { return Point(Point::Zero(x.ambient_dim())); },
                                    [](const AffineVariety& x) { return x.base(); },
                                    [](const GraphVariety& x) { return x.point(CVector(0)); }},
                         v);
    if (p.norm() > plan.rho_max) throw InfeasibleError("sample_variety: point variety lies beyond rho_max", 0);
    return {p};
  }

  CandidateStream stream(v, plan);
  std::vector<Point> out;
  out.reserve(plan.count);
  const bool net = plan.scheme == SampleScheme::SeparatedNet;
  const std::size_t budget = (net ? 64 : 1000) * plan.count + 1000;
  Point p;
  for (std::size_t k = 0; k < budget && out.size() < plan.count; ++k) {
    if (!stream.next(p)) continue;
    if (net) {
      bool separated = true;
      for (const auto& q : out)
        if (pseudo_distance(p, q) < plan.separation) {
          separated = false;
          break;
        }
      if (!separated) continue;
    }
    out.push_back(p);
  }
  if (out.size() < plan.count)
    throw InfeasibleError("sample_variety: only " + std::to_string(out.size()) + " of " +
                              std::to_string(plan.count) + " points found",
                          out.size());
  return out;
}

CMatrix kernel_gram(const std::vector<Point>& points) {
  const Eigen::Index m = static_cast<Eigen::Index>(points.size());
  const int n = m ? static_cast<int>(points[0].size()) : 0;
  CMatrix g(m, m);
  parallel_for(points.size(), [&](std::size_t j) {
    for (std::size_t k = 0; k <= j; ++k) {
      const cplx v = 1.0 / ipow(1.0 - inner(points[j], points[k]), n + 1);
      g(j, k) = v;
      g(k, j) = std::conj(v);
    }
  });
  for (Eigen::Index j = 0; j < m; ++j) g(j, j) = g(j, j).real();
  return g;
}

CMatrix normalized_kernel_gram(const std::vector<Point>& points) {
  const Eigen::Index m = static_cast<Eigen::Index>(points.size());
  const int n = m ? static_cast<int>(points[0].size()) : 0;
  std::vector<double> defect(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) defect[j] = 1.0 - points[j].squaredNorm();
  CMatrix g(m, m);
  parallel_for(points.size(), [&](std::size_t j) {
    for (std::size_t k = 0; k < j; ++k) {
      const cplx q = std::sqrt(defect[j] * defect[k]) / (1.0 - inner(points[j], points[k]));
      const cplx v = ipow(q, n + 1);
      g(j, k) = v;
      g(k, j) = std::conj(v);
    }
    g(j, j) = 1.0;
  });
  return g;
}

KernelSpan::KernelSpan(std::vector<Point> points, double tau) : tau_(tau), points_(std::move(points)) {
  if (points_.empty()) throw PreconditionError("build_span: empty point list");
  if (!(tau > 0.0 && tau < 1.0)) throw PreconditionError("build_span: cutoff must lie in (0,1)");
  ambient_dim_ = static_cast<int>(points_[0].size());
  for (const auto& p : points_) {
    if (p.size() != ambient_dim_) throw PreconditionError("build_span: mixed dimensions");
    require_interior(p, "build_span");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(points_.size());
  kernel_norms_.resize(m);
  for (Eigen::Index j = 0; j < m; ++j) kernel_norms_[j] = std::sqrt(kernel_norm_sq(points_[j]));
  gram_ = kernel_gram(points_);
  normalized_gram_ = normalized_kernel_gram(points_);

  Eigen::SelfAdjointEigenSolver<CMatrix> es(normalized_gram_);
  if (es.info() != Eigen::Success) throw NumericalError("build_span: eigensolver failed");
  const RVector& ev = es.eigenvalues();  // ascending
  const double top = ev[m - 1];
  Eigen::Index keep = 0;
  for (Eigen::Index k = m - 1; k >= 0 && ev[k] > tau_ * top; --k) ++keep;
  eigenvalues_.resize(keep);
  eigenvectors_.resize(m, keep);
  for (Eigen::Index k = 0; k < keep; ++k) {
    eigenvalues_[k] = ev[m - 1 - k];
    eigenvectors_.col(k) = es.eigenvectors().col(m - 1 - k);
  }
}

CMatrix KernelSpan::whitening() const {
  const RVector inv_sqrt = eigenvalues_.cwiseSqrt().cwiseInverse();
  return kernel_norms_.cwiseInverse().asDiagonal() * eigenvectors_ * inv_sqrt.asDiagonal();
}

double KernelSpan::whitening_residual() const {
  const RVector inv_sqrt = eigenvalues_.cwiseSqrt().cwiseInverse();
  const CMatrix w = eigenvectors_ * inv_sqrt.asDiagonal();
  const CMatrix r = w.adjoint() * normalized_gram_ * w - CMatrix::Identity(rank(), rank());
  return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
}

KernelSpan build_span(std::vector<Point> points, double tau) { return KernelSpan(std::move(points), tau); }

Projection project(const KernelSpan& span, const SampledFunction& f) {
  if (f.dim() != span.ambient_dim()) throw PreconditionError("project: dimension mismatch");
  const Eigen::Index m = static_cast<Eigen::Index>(span.size());
  CVector y(m);
  for (Eigen::Index j = 0; j < m; ++j) y[j] = f(span.points()[j]) / span.kernel_norms()[j];
  const RVector inv_sqrt = span.eigenvalues().cwiseSqrt().cwiseInverse();
  const CVector a = inv_sqrt.asDiagonal() * (span.eigenvectors().adjoint() * y);
  CVector coeffs = span.kernel_norms().cwiseInverse().asDiagonal() *
                   (span.eigenvectors() * (inv_sqrt.asDiagonal() * a));

  auto pts = std::make_shared<const std::vector<Point>>(span.points());
  auto cs = std::make_shared<const CVector>(coeffs);
  SampledFunction eval(
      span.ambient_dim(),
      [pts, cs](const Point& w) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < pts->size(); ++k) s += (*cs)[k] * kernel_value((*pts)[k], w);
        return s;
      },
      "projection");
  const double norm = a.norm();
  return Projection{std::move(coeffs), eval.with_norm_sq(norm * norm), norm};
}

SampledFunction project_oracle_linear(const LinearVariety& v, const SampledFunction& f) {
  if (f.dim() != v.ambient_dim()) throw PreconditionError("project_oracle_linear: dimension mismatch");
  const CMatrix m = projection_matrix(v);
  if (f.polynomial()) return SampledFunction::from_polynomial(f.polynomial()->compose_linear(m), "f o M");
  return SampledFunction(f.dim(), [m, f](const Point& w) { return f(CVector(m * w)); }, "f o M");
}

double equivalent_measure_constant(int n, int d) {
  if (d < 0 || d > n) throw PreconditionError("equivalent_measure_constant: need 0 <= d <= n");
  double c = 1.0;
  for (int k = 1; k <= d; ++k) c = c * (n - d + k) / k;
  return c;
}

WeightedPointMeasure equivalent_measure(const LinearVariety& v, const PolarGrid& grid) {
  const int n = v.ambient_dim();
  const int d = v.dim();
  if (d == 0) return point_mass(Point::Zero(n));
  const double c = equivalent_measure_constant(n, d);
  const BallQuadrature q = ball_quadrature(d, grid);
  WeightedPointMeasure mu;
  mu.dim = n;
  mu.points.reserve(q.nodes.size());
  mu.weights.reserve(q.nodes.size());
  for (std::size_t k = 0; k < q.nodes.size(); ++k) {
    mu.points.push_back(v.basis() * q.nodes[k]);
    mu.weights.push_back(c * std::pow(1.0 - q.nodes[k].squaredNorm(), n - d) * q.weights[k]);
  }
  return mu;
}

}  // namespace bergmod

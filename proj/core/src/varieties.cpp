#include "bergmod/varieties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bergmod/ball_geometry.hpp"

namespace bergmod {

namespace {

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

LinearVariety::LinearVariety(CMatrix basis) : basis_(std::move(basis)) {
  if (basis_.cols() > basis_.rows()) throw PreconditionError("LinearVariety: more basis vectors than ambient dimension");
  const CMatrix gram = basis_.adjoint() * basis_;
  if (max_abs(gram - CMatrix::Identity(gram.rows(), gram.cols())) > 1e-12)
    throw PreconditionError("LinearVariety: basis is not orthonormal");
}

LinearVariety LinearVariety::span(const CMatrix& vectors) {
  const Eigen::Index n = vectors.rows();
  if (vectors.cols() == 0) return zero(static_cast<int>(n));
  Eigen::JacobiSVD<CMatrix> svd(vectors, Eigen::ComputeThinU);
  const RVector& sv = svd.singularValues();
  Eigen::Index rank = 0;
  if (sv.size() > 0 && sv[0] > 0.0)
    while (rank < sv.size() && sv[rank] > kRankCutoff * sv[0]) ++rank;
  return LinearVariety(svd.matrixU().leftCols(rank));
}

LinearVariety LinearVariety::zero(int n) { return LinearVariety(CMatrix(n, 0)); }
LinearVariety LinearVariety::full(int n) { return LinearVariety(CMatrix::Identity(n, n)); }

double LinearVariety::residual(const Point& p) const {
  if (p.size() != ambient_dim()) throw PreconditionError("LinearVariety::residual: dimension mismatch");
  return (p - project(p)).norm();
}

double LinearVariety::containment_residual(const LinearVariety& other) const {
  if (other.ambient_dim() != ambient_dim()) throw PreconditionError("containment_residual: ambient mismatch");
  double worst = 0.0;
  for (Eigen::Index j = 0; j < other.basis().cols(); ++j) {
    const CVector b = other.basis().col(j);
    worst = std::max(worst, (b - project(b)).norm());
  }
  return worst;
}

AffineVariety::AffineVariety(Point base, LinearVariety direction)
    : base_(std::move(base)), direction_(std::move(direction)) {
  if (base_.size() != direction_.ambient_dim()) throw PreconditionError("AffineVariety: dimension mismatch");
  if (base_.squaredNorm() > 1.0 + kBoundaryTol) throw PreconditionError("AffineVariety: base point outside the closed ball");
}

double AffineVariety::residual(const Point& p) const {
  require_same_dim(base_, p, "AffineVariety::residual");
  const CVector d = p - base_;
  return (d - direction_.project(d)).norm();
}

Point AffineVariety::closest_point() const { return base_ - direction_.project(base_); }

GraphVariety::GraphVariety(int d, std::vector<Polynomial> components, CMatrix chart)
    : d_(d), components_(std::move(components)), chart_(std::move(chart)) {
  const Eigen::Index n = chart_.rows();
  if (chart_.cols() != n) throw PreconditionError("GraphVariety: chart must be square");
  if (max_abs(chart_.adjoint() * chart_ - CMatrix::Identity(n, n)) > 1e-12)
    throw PreconditionError("GraphVariety: chart is not unitary");
  if (d < 0 || d > n || static_cast<Eigen::Index>(components_.size()) != n - d)
    throw PreconditionError("GraphVariety: need n - d component polynomials");
  for (const auto& f : components_)
    if (f.num_vars() != d) throw PreconditionError("GraphVariety: components must have d variables");
  for (const auto& f : components_) {
    std::vector<Polynomial> row;
    for (int j = 0; j < d; ++j) row.push_back(f.derivative(j));
    partials_.push_back(std::move(row));
  }
}

GraphVariety::GraphVariety(int d, std::vector<Polynomial> components)
    : GraphVariety(d, components, CMatrix::Identity(static_cast<Eigen::Index>(d + components.size()),
                                                    static_cast<Eigen::Index>(d + components.size()))) {}

CVector GraphVariety::evaluate(const CVector& wprime) const {
  CVector out(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) out[i] = components_[i](wprime);
  return out;
}

CMatrix GraphVariety::jacobian(const CVector& wprime) const {
  CMatrix j(components_.size(), d_);
  for (std::size_t i = 0; i < partials_.size(); ++i)
    for (int k = 0; k < d_; ++k) j(i, k) = partials_[i][k](wprime);
  return j;
}

Point GraphVariety::point(const CVector& wprime) const {
  if (wprime.size() != d_) throw PreconditionError("GraphVariety::point: wrong number of free coordinates");
  CVector c(ambient_dim());
  c.head(d_) = wprime;
  c.tail(ambient_dim() - d_) = evaluate(wprime);
  return chart_ * c;
}

CVector GraphVariety::free_coords(const Point& p) const { return (chart_.adjoint() * p).head(d_); }

double GraphVariety::residual(const Point& p) const {
  if (p.size() != ambient_dim()) throw PreconditionError("GraphVariety::residual: dimension mismatch");
  const CVector c = chart_.adjoint() * p;
  return (evaluate(c.head(d_)) - c.tail(ambient_dim() - d_)).norm();
}

int ambient_dim(const Variety& v) {
  return std::visit([](const auto& x) { return x.ambient_dim(); }, v);
}

int intrinsic_dim(const Variety& v) {
  return std::visit([](const auto& x) { return x.dim(); }, v);
}

double variety_residual(const Variety& v, const Point& p) {
  return std::visit([&](const auto& x) { return x.residual(p); }, v);
}

const char* variety_kind(const Variety& v) {
  return std::visit(Overloaded{[](const LinearVariety&) { return "linear"; },
                               [](const AffineVariety&) { return "affine"; },
                               [](const GraphVariety&) { return "graph"; }},
                    v);
}

BoundaryPoint::BoundaryPoint(Point coords) : coords_(std::move(coords)) {
  if (std::abs(coords_.norm() - 1.0) >= kBoundaryTol)
    throw PreconditionError("BoundaryPoint: point is not on the unit sphere");
}

CMatrix projection_matrix(const LinearVariety& v) { return v.basis() * v.basis().adjoint(); }

LinearVariety subspace_intersection(const LinearVariety& v1, const LinearVariety& v2) {
  const int n = v1.ambient_dim();
  if (v2.ambient_dim() != n) throw PreconditionError("subspace_intersection: ambient mismatch");
  const CMatrix id = CMatrix::Identity(n, n);
  CMatrix stacked(2 * n, n);
  stacked.topRows(n) = id - projection_matrix(v1);
  stacked.bottomRows(n) = id - projection_matrix(v2);
  Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  // Null directions of the stacked complements; absolute floor keeps the
  // cutoff meaningful when both varieties are the full space (all sv zero).
  const double cutoff = kRankCutoff * std::max(sv.size() ? sv[0] : 0.0, 1.0);
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index k = 0; k < n; ++k)
    if (sv[k] <= cutoff) null_cols.push_back(k);
  CMatrix basis(n, static_cast<Eigen::Index>(null_cols.size()));
  for (std::size_t j = 0; j < null_cols.size(); ++j) basis.col(j) = svd.matrixV().col(null_cols[j]);
  return LinearVariety::span(basis);
}

std::vector<double> principal_angles(const LinearVariety& v1, const LinearVariety& v2,
                                     const LinearVariety& modulo) {
  const int n = v1.ambient_dim();
  if (v2.ambient_dim() != n || modulo.ambient_dim() != n)
    throw PreconditionError("principal_angles: dimension mismatch");
  if (v1.containment_residual(modulo) > kOnVarietyTol || v2.containment_residual(modulo) > kOnVarietyTol)
    throw PreconditionError("principal_angles: modulo space is not contained in both subspaces");
  const CMatrix pm = projection_matrix(modulo);
  LinearVariety a = LinearVariety::span(v1.basis() - pm * v1.basis());
  LinearVariety b = LinearVariety::span(v2.basis() - pm * v2.basis());
  if (a.dim() == 0 || b.dim() == 0) return {};
  if (a.dim() > b.dim()) std::swap(a, b);

  const RVector cosines = Eigen::JacobiSVD<CMatrix>(a.basis().adjoint() * b.basis()).singularValues();
  const CMatrix resid = a.basis() - projection_matrix(b) * a.basis();
  RVector sines = Eigen::JacobiSVD<CMatrix>(resid).singularValues();
  std::sort(sines.begin(), sines.end());

  std::vector<double> angles(static_cast<std::size_t>(a.dim()));
  for (int k = 0; k < a.dim(); ++k) {
    const double c = std::min(1.0, cosines[k]);
    const double s = std::min(1.0, sines[k]);
    angles[k] = c * c >= 0.5 ? std::asin(s) : std::acos(c);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

double subspace_gap(const LinearVariety& a, const LinearVariety& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("subspace_gap: ambient mismatch");
  if (a.dim() != b.dim()) return std::numbers::pi / 2;
  const auto angles = principal_angles(a, b, LinearVariety::zero(a.ambient_dim()));
  return angles.empty() ? 0.0 : angles.back();
}

LinearVariety tangent_space(const GraphVariety& v, const Point& p) {
  if (v.residual(p) > kOnVarietyTol) throw NotOnVarietyError("tangent_space: point is not on the graph");
  const int n = v.ambient_dim();
  const int d = v.dim();
  CMatrix cols(n, d);
  cols.topRows(d) = CMatrix::Identity(d, d);
  cols.bottomRows(n - d) = v.jacobian(v.free_coords(p));
  return LinearVariety::span(v.chart() * cols);
}

LinearVariety tangent_space(const Variety& v, const Point& p) {
  return std::visit(Overloaded{[&](const LinearVariety& x) {
                                 if (x.residual(p) > kOnVarietyTol)
                                   throw NotOnVarietyError("tangent_space: point is not on the subspace");
                                 return x;
                               },
                               [&](const AffineVariety& x) {
                                 if (x.residual(p) > kOnVarietyTol)
                                   throw NotOnVarietyError("tangent_space: point is not on the affine space");
                                 return x.direction();
                               },
                               [&](const GraphVariety& x) { return tangent_space(x, p); }},
                    v);
}

Transversality sphere_transversality(const LinearVariety& t, const BoundaryPoint& x) {
  if (t.ambient_dim() != x.coords().size()) throw PreconditionError("sphere_transversality: dimension mismatch");
  Transversality out;
  out.score = t.project(x.coords()).norm();
  out.transversal = out.score > 1e-6;
  return out;
}

CleanIntersection clean_intersection_check(const LinearVariety& t1, const LinearVariety& t2,
                                           const LinearVariety& t3) {
  if (t1.containment_residual(t3) > kOnVarietyTol || t2.containment_residual(t3) > kOnVarietyTol)
    throw PreconditionError("clean_intersection_check: T3 is not contained in T1 and T2");
  const LinearVariety meet = subspace_intersection(t1, t2);
  CleanIntersection out;
  out.intersection_dim = meet.dim();
  out.expected_dim = t3.dim();
  out.gap = subspace_gap(meet, t3);
  out.clean = out.intersection_dim == out.expected_dim && out.gap < 1e-8;
  return out;
}

LinearVariety localize(const Variety& v, const BoundaryPoint& x) {
  const Point& xh = x.coords();
  if (ambient_dim(v) != xh.size()) throw PreconditionError("localize: dimension mismatch");
  if (variety_residual(v, xh) > kOnVarietyTol) throw NotOnVarietyError("localize: boundary point is not on the variety");
  const LinearVariety t = tangent_space(v, xh);
  if (!sphere_transversality(t, x).transversal)
    throw PreconditionError("localize: variety is not transversal to the sphere at this point");
  // Coefficients c with <B c, x> = 0 form the null space of the row x^* B.
  const CMatrix row = xh.adjoint() * t.basis();
  Eigen::JacobiSVD<CMatrix> svd(row, Eigen::ComputeFullV);
  const int d = t.dim();
  CMatrix cols(xh.size(), d);
  cols.leftCols(d - 1) = t.basis() * svd.matrixV().rightCols(d - 1);
  cols.col(d - 1) = xh;
  return LinearVariety::span(cols);
}

TangentialWitness tangential_pair_witness(cplx slope, double r) {
  if (!(r > 0.0 && r < 1.0)) throw PreconditionError("tangential_pair_witness: r must lie in (0,1)");
  TangentialWitness out;
  out.w_r = Point(2);
  out.w_r << r, slope * (r - 1.0);
  if (!(out.w_r.squaredNorm() < 1.0)) throw PreconditionError("tangential_pair_witness: witness lies outside the ball");
  Point center(2);
  center << r, 0.0;
  out.image = MoebiusMap(center)(out.w_r);
  out.rho = pseudo_distance(center, out.w_r);
  return out;
}

}  // namespace bergmod

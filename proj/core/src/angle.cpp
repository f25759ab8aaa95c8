#include "bergmod/angle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "bergmod/csv.hpp"

namespace bergmod {

namespace {

// Orthonormal basis of the column span of c, keeping directions whose
// squared singular value exceeds tau * ref (ref < 0: the largest one).
CMatrix orth(const CMatrix& c, double tau, double ref = -1.0) {
  if (c.cols() == 0 || c.rows() == 0) return CMatrix(c.rows(), 0);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(c * c.adjoint());
  const RVector& w = es.eigenvalues();
  const double base = ref < 0.0 ? w[w.size() - 1] : ref;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = w.size() - 1; k >= 0; --k)
    if (w[k] > tau * base) keep.push_back(k);
  CMatrix out(c.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) out.col(j) = es.eigenvectors().col(keep[j]);
  return out;
}

double hermitian_norm(const CMatrix& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return std::max(std::abs(es.eigenvalues()[0]), std::abs(es.eigenvalues()[h.rows() - 1]));
}

double largest_singular_value(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMatrix>(a).singularValues()[0];
}

// Norms of the explicit projections onto [h3 f1] and [h3 f2], where f1, f2
// are orthonormal and orthogonal to h3.
void fill_norms(AngleReport& r, const CMatrix& h3, const CMatrix& f1, const CMatrix& f2) {
  const Eigen::Index dim = h3.rows();
  CMatrix free(dim, f1.cols() + f2.cols());
  free << f1, f2;
  const CMatrix zf = orth(free, kRankCutoff);
  CMatrix z(dim, h3.cols() + zf.cols());
  z << h3, zf;
  auto proj = [&](const CMatrix& f) {
    CMatrix h(dim, h3.cols() + f.cols());
    h << h3, f;
    const CMatrix a = z.adjoint() * h;
    return CMatrix(a * a.adjoint());
  };
  const CMatrix q1 = proj(f1), q2 = proj(f2);
  const CMatrix a3 = z.adjoint() * h3;
  const CMatrix q3 = a3 * a3.adjoint();
  const CMatrix m21 = q2 * q1 - q3;
  const CMatrix m121 = q1 * q2 * q1 - q3;
  const CMatrix gram21 = m21.adjoint() * m21;
  r.cos_angle = largest_singular_value(f1.adjoint() * f2);
  r.norm_21 = std::sqrt(hermitian_norm(gram21));
  r.norm_121 = hermitian_norm(m121);
  r.identity_residual = hermitian_norm(gram21 - m121);
}

AngleReport finite_report(const LinearVariety& v1, const LinearVariety& v2, const LinearVariety& v3) {
  const int n = v1.ambient_dim();
  const CMatrix p3 = projection_matrix(v3);
  const CMatrix p1 = projection_matrix(v1), p2 = projection_matrix(v2);
  const LinearVariety f1 = LinearVariety::span(v1.basis() - p3 * v1.basis());
  const LinearVariety f2 = LinearVariety::span(v2.basis() - p3 * v2.basis());

  AngleReport r;
  r.rank1 = v1.dim();
  r.rank2 = v2.dim();
  r.rank3 = v3.dim();
  r.union_rank = n;
  r.cos_angle = largest_singular_value(f1.basis().adjoint() * f2.basis());
  const CMatrix m21 = p2 * p1 - p3;
  const CMatrix m121 = p1 * p2 * p1 - p3;
  const CMatrix gram21 = m21.adjoint() * m21;
  r.norm_21 = std::sqrt(hermitian_norm(gram21));
  r.norm_121 = hermitian_norm(m121);
  r.identity_residual = hermitian_norm(gram21 - m121);
  r.verdict = closedness_verdict(r, r.margin);
  return r;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Closed: return "closed";
    case Verdict::NotClosed: return "not-closed";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "closed") return Verdict::Closed;
  if (s == "not-closed") return Verdict::NotClosed;
  if (s == "inconclusive") return Verdict::Inconclusive;
  throw SchemaError("unknown verdict '" + s + "'");
}

AngleReport subspace_angle_finite(const CMatrix& h1, const CMatrix& h2) {
  if (h1.rows() != h2.rows()) throw PreconditionError("subspace_angle_finite: dimension mismatch");
  const LinearVariety v1(h1), v2(h2);
  return finite_report(v1, v2, subspace_intersection(v1, v2));
}

AngleReport subspace_angle_finite(const CMatrix& h1, const CMatrix& h2, const CMatrix& h3) {
  if (h1.rows() != h2.rows() || h3.rows() != h1.rows())
    throw PreconditionError("subspace_angle_finite: dimension mismatch");
  const LinearVariety v1(h1), v2(h2), v3(h3);
  if (v1.containment_residual(v3) > kOnVarietyTol || v2.containment_residual(v3) > kOnVarietyTol)
    throw PreconditionError("subspace_angle_finite: H3 is not contained in H1 and H2");
  return finite_report(v1, v2, v3);
}

AngleReport module_angle_sampled(const KernelSpan& span1, const KernelSpan& span2, const KernelSpan* span3,
                                 double margin) {
  if (span1.ambient_dim() != span2.ambient_dim() || (span3 && span3->ambient_dim() != span1.ambient_dim()))
    throw PreconditionError("module_angle_sampled: dimension mismatch");

  // Union of the sample sets with exact duplicates merged.
  std::vector<Point> points;
  std::map<std::vector<double>, Eigen::Index> seen;
  auto add = [&](const KernelSpan& s) {
    std::vector<Eigen::Index> idx;
    for (const auto& p : s.points()) {
      std::vector<double> key;
      for (Eigen::Index i = 0; i < p.size(); ++i) {
        key.push_back(p[i].real());
        key.push_back(p[i].imag());
      }
      auto [it, inserted] = seen.emplace(key, static_cast<Eigen::Index>(points.size()));
      if (inserted) points.push_back(p);
      idx.push_back(it->second);
    }
    return idx;
  };
  const auto i1 = add(span1);
  const auto i2 = add(span2);
  const auto i3 = span3 ? add(*span3) : std::vector<Eigen::Index>{};

  // Coordinates of the normalized kernels in an orthonormal basis of the
  // union span: Gn ~ C^* C with C = Lambda^{1/2} U^*.
  const KernelSpan uni(points, kRankCutoff);
  const CMatrix c = uni.eigenvalues().cwiseSqrt().asDiagonal() * uni.eigenvectors().adjoint();
  auto columns = [&](const std::vector<Eigen::Index>& idx) {
    CMatrix out(c.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) out.col(j) = c.col(idx[j]);
    return out;
  };
  const CMatrix c1 = columns(i1), c2 = columns(i2), c3 = columns(i3);

  AngleReport r;
  r.margin = margin;
  r.union_rank = uni.rank();
  auto reproduce = [](const CMatrix& ci, const KernelSpan& s) {
    return (ci.adjoint() * ci - s.normalized_gram()).cwiseAbs().maxCoeff();
  };
  r.gram_residual = std::max(reproduce(c1, span1), reproduce(c2, span2));
  if (span3) r.gram_residual = std::max(r.gram_residual, reproduce(c3, *span3));

  const CMatrix h3 = orth(c3, kRankCutoff);
  auto free_part = [&](const CMatrix& ci) {
    const double ref = ci.squaredNorm() > 0.0 ? std::pow(largest_singular_value(ci), 2) : 0.0;
    const CMatrix resid = ci - h3 * (h3.adjoint() * ci);
    return orth(resid, kRankCutoff, ref);
  };
  const CMatrix f1 = free_part(c1), f2 = free_part(c2);
  r.rank3 = static_cast<int>(h3.cols());
  r.rank1 = r.rank3 + static_cast<int>(f1.cols());
  r.rank2 = r.rank3 + static_cast<int>(f2.cols());
  fill_norms(r, h3, f1, f2);

  if (r.gram_residual > 1e-6) {
    r.rank_collapse = true;
    r.note = "union span does not reproduce the span Grams; rank collapse";
  }
  r.verdict = closedness_verdict(r, margin);
  return r;
}

LinearTripleAngle linear_triple_angle_exact(const LinearVariety& v1, const LinearVariety& v2) {
  const LinearVariety v3 = subspace_intersection(v1, v2);
  const auto angles = principal_angles(v1, v2, v3);
  LinearTripleAngle out;
  if (angles.empty()) return out;
  out.cos_angle = std::cos(angles.front());
  out.norm_121 = out.cos_angle * out.cos_angle;
  return out;
}

std::vector<double> alternating_projection_decay(const LinearVariety& v1, const LinearVariety& v2,
                                                 const CVector& v, int k) {
  if (v.size() != v2.ambient_dim() || v1.ambient_dim() != v2.ambient_dim())
    throw PreconditionError("alternating_projection_decay: dimension mismatch");
  if (v2.residual(v) > kOnVarietyTol * std::max(1.0, v.norm()))
    throw PreconditionError("alternating_projection_decay: v is not in V2");
  std::vector<double> norms;
  CVector x = v;
  for (int j = 0; j < k; ++j) {
    x = v2.project(v1.project(x));
    norms.push_back(x.norm());
  }
  return norms;
}

Verdict closedness_verdict(const AngleReport& report, double margin) {
  if (report.rank_collapse) return Verdict::Inconclusive;
  return report.norm_121 < 1.0 - margin ? Verdict::Closed : Verdict::Inconclusive;
}

Verdict closedness_verdict(const std::vector<AngleReport>& ladder, double margin) {
  if (ladder.empty()) return Verdict::Inconclusive;
  bool increasing = true, all_below = true;
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    if (ladder[k].rank_collapse) return Verdict::Inconclusive;
    if (k > 0 && !(ladder[k].norm_121 > ladder[k - 1].norm_121)) increasing = false;
    if (!(ladder[k].norm_121 < 1.0 - margin)) all_below = false;
  }
  if (ladder.size() >= 2 && increasing && ladder.back().norm_121 > 1.0 - margin / 2) return Verdict::NotClosed;
  if (all_below) return Verdict::Closed;
  return Verdict::Inconclusive;
}

std::vector<std::string> angle_report_csv_header() {
  return {"cos_angle", "norm_21", "norm_121", "rank1", "rank2", "rank3", "union_rank",
          "identity_residual", "gram_residual", "margin", "verdict"};
}

std::vector<std::string> angle_report_csv_fields(const AngleReport& r) {
  using csv::format_double;
  return {format_double(r.cos_angle),         format_double(r.norm_21),       format_double(r.norm_121),
          std::to_string(r.rank1),            std::to_string(r.rank2),        std::to_string(r.rank3),
          std::to_string(r.union_rank),       format_double(r.identity_residual),
          format_double(r.gram_residual),     format_double(r.margin),        to_string(r.verdict)};
}

}  // namespace bergmod

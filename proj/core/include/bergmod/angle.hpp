#pragma once

#include <string>
#include <vector>

#include "bergmod/common.hpp"
#include "bergmod/kernel_span.hpp"
#include "bergmod/varieties.hpp"

namespace bergmod {

enum class Verdict { Closed, NotClosed, Inconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

inline constexpr double kDefaultMargin = 0.05;

struct AngleReport {
  double cos_angle = 0.0;  // largest singular value between H1 (-) H3 and H2 (-) H3
  double norm_21 = 0.0;    // ||H2 H1 - H3||
  double norm_121 = 0.0;   // ||H1 H2 H1 - H3|| (equal to ||H2 H1 H2 - H3||)
  int rank1 = 0, rank2 = 0, rank3 = 0;
  int union_rank = 0;
  // ||(H2H1 - H3)^*(H2H1 - H3) - (H1H2H1 - H3)||
  double identity_residual = 0.0;
  // Relative error with which the union coordinates reproduce each span's
  // normalized Gram (sampled reports only).
  double gram_residual = 0.0;
  // Set when the union coordinates fail to reproduce a span's Gram; such a
  // report never yields a closed or not-closed verdict.
  bool rank_collapse = false;
  double margin = kDefaultMargin;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;
};

// Finite-dimensional angle between the column spans of two orthonormal bases
// with H3 = H1 cap H2 computed numerically.
AngleReport subspace_angle_finite(const CMatrix& h1, const CMatrix& h2);
// Same with a caller-supplied H3 (must lie in both spans).
AngleReport subspace_angle_finite(const CMatrix& h1, const CMatrix& h2, const CMatrix& h3);

// Angle between the quotient-module models spanned by the kernels of three
// sample sets. span3 may be null (trivial intersection).
//
// All three spans are embedded once in coordinates of the union span. H3 is
// the span of the span3 kernels; H1 and H2 are completed from H3 by the
// components of their kernels orthogonal to H3, so the models satisfy
// H3 <= H1, H2 exactly. Norms are then evaluated from explicit projections.
AngleReport module_angle_sampled(const KernelSpan& span1, const KernelSpan& span2, const KernelSpan* span3,
                                 double margin = kDefaultMargin);

struct LinearTripleAngle {
  double cos_angle = 0.0;
  double norm_121 = 0.0;  // cos^2 of the smallest principal angle modulo V1 cap V2
};

LinearTripleAngle linear_triple_angle_exact(const LinearVariety& v1, const LinearVariety& v2);

// ||(M2 M1)^j v|| for j = 1..k. Requires v in V2.
std::vector<double> alternating_projection_decay(const LinearVariety& v1, const LinearVariety& v2,
                                                 const CVector& v, int k);

// Single report: closed if norm_121 < 1 - margin, otherwise inconclusive.
Verdict closedness_verdict(const AngleReport& report, double margin = kDefaultMargin);

// Refinement ladder ordered by increasing rho_max. Not closed if norm_121
// strictly increases and the last rung exceeds 1 - margin/2; closed if every
// rung is below 1 - margin; inconclusive otherwise or if any rung hit a
// rank collapse.
Verdict closedness_verdict(const std::vector<AngleReport>& ladder, double margin = kDefaultMargin);

// One-line CSV rendering for sweep tables.
std::vector<std::string> angle_report_csv_header();
std::vector<std::string> angle_report_csv_fields(const AngleReport& r);

}  // namespace bergmod

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: bergmod_acceptance [criterion...]   (default: all)

#include <Eigen/Dense>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bergmod/angle.hpp"
#include "bergmod/ball_geometry.hpp"
#include "bergmod/bergman.hpp"
#include "bergmod/carleson.hpp"
#include "bergmod/experiments.hpp"
#include "bergmod/kernel_span.hpp"
#include "bergmod/rng.hpp"

using namespace bergmod;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Point random_in(int n, Rng& rng, double radius) { return sample_ball_uniform(n, rng) * radius; }

CMatrix gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g;
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

LinearVariety line(double theta) {
  CMatrix b(2, 1);
  b << std::cos(theta), std::sin(theta);
  return LinearVariety(b);
}

LinearVariety plane(int n, const CMatrix& cols) { return LinearVariety::span(cols.topRows(n)); }

SamplePlan plan(std::size_t m, double rho, std::uint64_t seed) {
  SamplePlan p;
  p.count = m;
  p.rho_max = rho;
  p.seed = seed;
  return p;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n : {2, 3}) {
    Rng rng(derive_seed(101, n));
    for (int k = 0; k < 10000; ++k) {
      const Point a = sample_ball_uniform(n, rng), z = sample_ball_uniform(n, rng), w = sample_ball_uniform(n, rng);
      const auto r = moebius_identity_residuals(a, z, w);
      worst = std::max({worst, r.inner_identity, r.norm_identity});
    }
  }
  const double t = seconds_since(t0);
  o.require(worst < 1e-12, "max residual " + fmt(worst) + " >= 1e-12");
  o.require(t < 5.0, "runtime " + fmt(t) + " s");
  o.note("max residual " + fmt(worst) + ", " + fmt(t) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  Rng rng(202);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 3;
    const Point z = random_in(n, rng, 0.9), w = random_in(n, rng, 0.9);
    const MoebiusMap phi(z);
    const double h = 1e-6;
    Eigen::MatrixXd j(2 * n, 2 * n);
    for (int c = 0; c < 2 * n; ++c) {
      Point e = Point::Zero(n);
      e[c / 2] = (c % 2 == 0) ? cplx(h, 0) : cplx(0, h);
      const Point d = (phi(w + e) - phi(w - e)) / (2 * h);
      for (int r = 0; r < n; ++r) {
        j(2 * r, c) = d[r].real();
        j(2 * r + 1, c) = d[r].imag();
      }
    }
    const double fd = j.determinant();
    worst = std::max(worst, std::abs(moebius_jacobian_det(z, w) - fd) / std::abs(fd));
  }
  o.require(worst < 1e-6, "relative error " + fmt(worst));
  o.note("max relative error " + fmt(worst));
  return o;
}

Outcome criterion3() {
  Outcome o;
  Rng rng(303);
  std::size_t mismatches = 0;
  for (int k = 0; k < 10000; ++k) {
    const Point z = random_in(2, rng, 0.95);
    const double r = 0.25 + 2.0 * uniform01(rng);
    const Point w = sample_ball_uniform(2, rng);
    const auto ball = ball_params(z, r);
    if (ball.contains(w) != (pseudo_distance(z, w) < ball.s)) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " membership mismatches");

  double worst_z = 0.0;
  for (double zr : {0.0, 0.5, 0.9})
    for (double r : {0.5, 1.0}) {
      Point z(2);
      z << zr, 0.0;
      const auto ball = ball_params(z, r);
      const auto f = SampledFunction(2, [ball](const Point& w) { return cplx(ball.contains(w) ? 1.0 : 0.0); });
      const auto est = mc_integrate_ball(f, 1000000, derive_seed(303, static_cast<std::uint64_t>(zr * 10 + r * 100)));
      const double zscore = std::abs(est.value.real() - ball_volume(z, r)) / est.std_error;
      worst_z = std::max(worst_z, zscore);
      o.require(zscore < 3.0, "volume at |z|=" + fmt(zr) + ", r=" + fmt(r) + " off by " + fmt(zscore) + " SE");
    }
  o.note("0 mismatches in 1e4; worst volume deviation " + fmt(worst_z) + " SE");
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0.0;
  bool tail_zero = true;
  for (int n : {2, 3})
    for (double rz : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9})
      for (int dir = 0; dir < 4; ++dir) {
        Point z = Point::Zero(n);
        z[0] = std::polar(rz, 0.7 * dir);
        z[n - 1] += std::polar(rz * 0.3, 1.1 * dir);
        if (z.norm() > 0.9) z *= 0.9 / z.norm();
        const CVector g = grad_sq_moebius_at_zero(z);
        for (int i = 1; i < n; ++i) tail_zero = tail_zero && g[i] == cplx(0.0);
        const MoebiusMap phi(CVector(align_to_first_axis(z) * z));
        const double h = 1e-5;
        for (int i = 0; i < n; ++i) {
          Point ex = Point::Zero(n), ey = Point::Zero(n);
          ex[i] = h;
          ey[i] = cplx(0, h);
          const double dx = (phi(ex).squaredNorm() - phi(-ex).squaredNorm()) / (2 * h);
          const double dy = (phi(ey).squaredNorm() - phi(-ey).squaredNorm()) / (2 * h);
          worst = std::max(worst, std::abs(0.5 * cplx(dx, -dy) - g[i]));
        }
      }
  o.require(worst < 1e-6, "central-difference error " + fmt(worst));
  o.require(tail_zero, "coordinates 2..n are not exactly zero");
  o.note("max error " + fmt(worst) + ", tail exactly zero");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(505);
  struct Case {
    std::string name;
    LinearVariety v;
  };
  CMatrix e12 = CMatrix::Zero(3, 2);
  e12(0, 0) = e12(1, 1) = 1.0;
  const std::vector<Case> cases = {{"line e1 in C2", line(0.0)},
                                   {"tilted line in C2", line(0.6)},
                                   {"generic line in C2", LinearVariety::span(gaussian(2, 1, rng))},
                                   {"generic line in C3", LinearVariety::span(gaussian(3, 1, rng))},
                                   {"coordinate plane in C3", plane(3, e12)},
                                   {"generic plane in C3", LinearVariety::span(gaussian(3, 2, rng))}};
  double worst200 = 0.0;
  for (const auto& c : cases) {
    const int n = c.v.ambient_dim();
    // Degree-5 polynomial with unit-modulus coefficients on a few monomials.
    Polynomial p(n);
    for (int t = 0; t < 6; ++t) {
      MultiIndex a(n, 0);
      int left = t;
      for (int i = 0; i < n && left > 0; ++i) {
        const int take = (i == n - 1) ? left : static_cast<int>(rng() % (left + 1));
        a[i] = take;
        left -= take;
      }
      if (left > 0) a[0] += left;
      p.add_term(a, std::polar(1.0, 2 * pi * uniform01(rng)));
    }
    const auto f = SampledFunction::from_polynomial(p);
    const auto oracle = project_oracle_linear(c.v, f);
    std::vector<Point> grid;
    for (int k = 0; k < 100; ++k) grid.push_back(random_in(n, rng, 0.7));
    std::vector<double> errs;
    for (std::size_t m : {50, 100, 200, 400}) {
      const auto pr = project(build_span(sample_variety(c.v, plan(m, 0.95, 55))), f);
      double e = 0.0;
      for (const auto& w : grid) e = std::max(e, std::abs(pr.evaluator(w) - oracle(w)));
      errs.push_back(e);
    }
    worst200 = std::max(worst200, errs[2]);
    o.require(errs[2] < 1e-3, c.name + ": error " + fmt(errs[2]) + " at m=200");
    for (std::size_t k = 1; k < errs.size(); ++k)
      o.require(errs[k] < errs[k - 1], c.name + ": not decreasing (" + fmt(errs[k - 1]) + " -> " + fmt(errs[k]) + ")");
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "runtime " + fmt(t) + " s");
  o.note("worst error at m=200 " + fmt(worst200) + ", " + fmt(t) + " s");
  return o;
}

// Independent oracle for the triple norm: orthonormal bases of each sampled
// span inside the union span, projections assembled as dense matrices.
double brute_force_norm_121(const std::vector<Point>& s1, const std::vector<Point>& s2, const std::vector<Point>& s3) {
  std::vector<Point> all;
  all.insert(all.end(), s1.begin(), s1.end());
  all.insert(all.end(), s2.begin(), s2.end());
  all.insert(all.end(), s3.begin(), s3.end());
  const auto n_all = static_cast<Eigen::Index>(all.size());
  CMatrix g(n_all, n_all);
  for (Eigen::Index i = 0; i < n_all; ++i)
    for (Eigen::Index j = 0; j < n_all; ++j) {
      const double ni = std::pow(1.0 - all[i].squaredNorm(), 0.5 * (all[i].size() + 1));
      const double nj = std::pow(1.0 - all[j].squaredNorm(), 0.5 * (all[j].size() + 1));
      g(i, j) = ni * nj * std::pow(1.0 - (all[j].adjoint() * all[i])(0, 0), -(all[i].size() + 1.0));
    }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g);
  const double top = es.eigenvalues().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < n_all; ++k)
    if (es.eigenvalues()[k] > 1e-10 * top) keep.push_back(k);
  CMatrix c(static_cast<Eigen::Index>(keep.size()), n_all);  // coordinates of each normalized kernel
  for (std::size_t r = 0; r < keep.size(); ++r)
    c.row(r) = std::sqrt(es.eigenvalues()[keep[r]]) * es.eigenvectors().col(keep[r]).adjoint();
  auto projector = [&](Eigen::Index from, Eigen::Index count) {
    const CMatrix block = c.middleCols(from, count);
    Eigen::JacobiSVD<CMatrix> svd(block, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sv.size() && sv[r] * sv[r] > 1e-10 * sv[0] * sv[0]) ++r;
    const CMatrix u = svd.matrixU().leftCols(r);
    return CMatrix(u * u.adjoint());
  };
  const auto n1 = static_cast<Eigen::Index>(s1.size()), n2 = static_cast<Eigen::Index>(s2.size());
  const CMatrix p1 = projector(0, n1), p2 = projector(n1, n2), p3 = projector(n1 + n2, n_all - n1 - n2);
  const CMatrix m = p1 * p2 * p1 - p3;
  Eigen::SelfAdjointEigenSolver<CMatrix> em(CMatrix((m + m.adjoint()) / 2.0), Eigen::EigenvaluesOnly);
  return em.eigenvalues().cwiseAbs().maxCoeff();
}

Outcome criterion6() {
  Outcome o;
  double worst = 0.0, worst_oracle = 0.0;
  const auto origin = build_span({Point::Zero(2)});
  for (double t : {pi / 6, pi / 4, pi / 3}) {
    const double exact = linear_triple_angle_exact(line(0), line(t)).norm_121;
    o.require(std::abs(exact - std::cos(t) * std::cos(t)) < 1e-14, "closed form differs from cos^2");
    const auto s1 = sample_variety(line(0), plan(200, 0.95, 61));
    const auto s2 = sample_variety(line(t), plan(200, 0.95, 62));
    const auto r = module_angle_sampled(build_span(s1), build_span(s2), &origin);
    const double rel = std::abs(r.norm_121 - exact) / exact;
    worst = std::max(worst, rel);
    o.require(rel < 0.02, "theta=" + fmt(t) + ": relative error " + fmt(rel));

    const auto b1 = sample_variety(line(0), plan(400, 0.95, 63));
    const auto b2 = sample_variety(line(t), plan(400, 0.95, 64));
    const double brute = brute_force_norm_121(b1, b2, {Point::Zero(2)});
    const double rel_b = std::abs(brute - exact) / exact;
    worst_oracle = std::max(worst_oracle, rel_b);
    o.require(rel_b < 0.01, "theta=" + fmt(t) + ": brute-force oracle off by " + fmt(rel_b));
  }
  // Plane pair in C^3 sharing e1, free directions at pi/3.
  CMatrix a = CMatrix::Zero(3, 2), b = CMatrix::Zero(3, 2);
  a(0, 0) = a(1, 1) = 1.0;
  b(0, 0) = 1.0;
  b(1, 1) = std::cos(pi / 3);
  b(2, 1) = std::sin(pi / 3);
  const LinearVariety v1(a), v2(b);
  const auto v3 = subspace_intersection(v1, v2);
  const double exact = linear_triple_angle_exact(v1, v2).norm_121;
  const auto s1 = sample_variety(v1, plan(200, 0.95, 65));
  const auto s2 = sample_variety(v2, plan(200, 0.95, 66));
  std::vector<Point> q3;
  for (const auto& p : s1) q3.push_back(v3.project(p));
  for (const auto& p : s2) q3.push_back(v3.project(p));
  const auto span3 = build_span(q3);
  const auto r = module_angle_sampled(build_span(s1), build_span(s2), &span3);
  const double rel = std::abs(r.norm_121 - exact) / exact;
  worst = std::max(worst, rel);
  o.require(rel < 0.02, "plane pair: relative error " + fmt(rel));
  o.note("worst sampled error " + fmt(worst) + ", worst oracle error " + fmt(worst_oracle));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto config = cli::resolve_config("boundary-pair", cli::Json::object(), {});
  const auto res = cli::run_boundary_pair(config);
  const auto& trace = res.results.at("witness_trace");
  for (std::size_t k = 1; k < trace.size(); ++k)
    o.require(trace[k].at("rho").get<double>() < trace[k - 1].at("rho").get<double>(), "witness rho not decreasing");
  const auto& ladder = res.results.at("ladder");
  std::string norms;
  double prev = -1.0, last = 0.0;
  for (const auto& rung : ladder) {
    last = rung.at("report").at("norm_121").get<double>();
    o.require(last > prev, "norm_121 not increasing");
    prev = last;
    norms += (norms.empty() ? "" : ", ") + fmt(last);
  }
  o.require(last > 0.95, "final norm_121 " + fmt(last));
  o.require(res.verdict == "not-closed", "verdict " + res.verdict);
  o.note("norm_121 ladder " + norms + ", verdict " + res.verdict);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto config = cli::resolve_config("decompose", cli::Json::object(), {});
  const auto res = cli::run_decompose(config);
  o.require(res.verdict == "positive", "verdict " + res.verdict);
  double worst_gap = 0.0;
  for (const auto& p : res.results.at("points")) {
    const double gap = p.at("localized").at("intersection_check").at("gap").get<double>();
    worst_gap = std::max(worst_gap, gap);
  }
  o.require(worst_gap < 1e-8, "localized intersection gap " + fmt(worst_gap));
  const auto& sc = res.results.at("sampled_check");
  o.require(sc.at("rho_max").get<double>() == 0.999, "sampled check not at rho_max 0.999");
  const double dev = sc.at("relative_deviation").get<double>();
  o.require(dev <= 0.10, "sampled deviation " + fmt(dev));
  o.note("gap " + fmt(worst_gap) + ", sampled deviation " + fmt(dev));
  return o;
}

Outcome criterion9() {
  Outcome o;
  Rng rng(909);
  double worst_id = 0.0, worst_planted = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 4 + k % 3, common = k % 3, extra = 1 + k % 2;
    CMatrix c = gaussian(n, common, rng);
    CMatrix a(n, common + extra), b(n, common + extra);
    a << c, gaussian(n, extra, rng);
    b << c, gaussian(n, extra, rng);
    const auto h1 = LinearVariety::span(a).basis(), h2 = LinearVariety::span(b).basis();
    worst_id = std::max(worst_id, subspace_angle_finite(h1, h2).identity_residual);
    if (common >= 1) {
      const CMatrix h3 = LinearVariety::span(c.leftCols(common - 1)).basis();
      worst_planted = std::max(worst_planted, std::abs(subspace_angle_finite(h1, h2, h3).norm_121 - 1.0));
    }
  }
  o.require(worst_id < 1e-12, "identity residual " + fmt(worst_id));
  o.require(worst_planted < 1e-10, "planted norm off by " + fmt(worst_planted));
  o.note("identity residual " + fmt(worst_id) + ", planted deviation " + fmt(worst_planted));
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto corpus1 = monomial_corpus(1, 2);
  const auto leb = carleson_ladder(lebesgue_measure(1, PolarGrid{128, 2048}), 1.0, corpus1);
  for (double v : {leb.sup_kernel, leb.sup_ratio, leb.embedding_ratio})
    o.require(std::abs(v - 1.0) < 0.05, "Lebesgue value " + fmt(v));
  o.require(leb.verdict == "carleson", "Lebesgue verdict " + leb.verdict);

  CMatrix e1 = CMatrix::Zero(2, 1);
  e1(0, 0) = 1.0;
  const auto line_nu = equivalent_measure(LinearVariety(e1), PolarGrid{128, 2048});
  const auto lr = carleson_ladder(line_nu, 1.0, monomial_corpus(2, 2));
  o.require(lr.kernel_verdict == TrendVerdict::Stable && lr.ratio_verdict == TrendVerdict::Stable &&
                lr.embedding_verdict == TrendVerdict::Stable,
            "line measure not stable");

  const auto fail_nu = radial_density_measure(1, -0.5, PolarGrid{128, 2048});
  const auto fr = carleson_ladder(fail_nu, 1.0, corpus1);
  for (const auto* rungs : {&fr.kernel_rungs, &fr.ratio_rungs, &fr.embedding_rungs})
    for (std::size_t k = 1; k < rungs->size(); ++k) o.require((*rungs)[k] > (*rungs)[k - 1], "failing density not monotone");
  o.require(fr.verdict == "not-carleson", "failing density verdict " + fr.verdict);

  double worst = 0.0;
  for (const auto* nu : {&line_nu, &fail_nu}) {
    for (const auto& z : default_zgrid(nu->dim)) {
      const double a = carleson_kernel_integral(*nu, z);
      const double b = embedding_ratio(*nu, SampledFunction::normalized_kernel(z));
      worst = std::max(worst, std::abs(a - b) / std::max(1.0, a));
    }
  }
  o.require(worst < 1e-10, "kernel identity residual " + fmt(worst));
  o.note("Lebesgue " + fmt(leb.sup_kernel) + "/" + fmt(leb.sup_ratio) + "/" + fmt(leb.embedding_ratio) +
         ", line ratio rungs " + fmt(lr.ratio_rungs.front()) + ".." + fmt(lr.ratio_rungs.back()) +
         ", failing kernel rungs " + fmt(fr.kernel_rungs.front()) + ".." + fmt(fr.kernel_rungs.back()) +
         ", identity residual " + fmt(worst));
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome criterion11() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "bergmod-acceptance-determinism";
  std::filesystem::remove_all(dir);
  cli::Overrides ov;
  ov.out_dir = dir.string();
  for (const auto& s : cli::kScenarios) {
    const auto config = cli::resolve_config(s, cli::Json::object(), ov);
    std::vector<std::string> first;
    std::string first_report;
    for (int run = 0; run < 2; ++run) {
      const auto out = cli::execute(s, config);
      std::vector<std::string> tables;
      for (const auto& p : out.table_paths) tables.push_back(slurp(p));
      const std::string report = cli::strip_header(slurp(out.report_path));
      if (run == 0) {
        first = tables;
        first_report = report;
      } else {
        o.require(report == first_report, s + ": report differs");
        o.require(tables == first, s + ": tables differ");
      }
    }
  }
  o.note("5 scenarios re-run, reports and tables identical");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Moebius identities on 1e4 triples in B2, B3", criterion1},
      {"Jacobian determinant vs finite differences", criterion2},
      {"Hyperbolic ball membership and volume", criterion3},
      {"Gradient of |phi_z|^2 at the origin", criterion4},
      {"Projection onto linear varieties converges to f o M", criterion5},
      {"Linear-pair angle vs closed form and Gram oracle", criterion6},
      {"Tangential pair is not closed", criterion7},
      {"Decomposition of transverse planes", criterion8},
      {"Finite-dimensional operator identity", criterion9},
      {"Carleson tests", criterion10},
      {"Deterministic reports", criterion11},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", id, criteria[k].first.c_str(),
                seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}

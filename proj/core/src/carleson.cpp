#include "bergmod/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "bergmod/ball_geometry.hpp"
#include "bergmod/parallel.hpp"

namespace bergmod {

std::vector<Point> default_zgrid(int n, const std::vector<double>& shells) {
  if (n < 1) throw PreconditionError("default_zgrid: dimension must be positive");
  std::vector<Point> grid;
  for (double radius : shells) {
    if (!(radius >= 0.0 && radius < 1.0)) throw PreconditionError("default_zgrid: shell radius must lie in [0,1)");
    if (radius == 0.0) {
      grid.push_back(Point::Zero(n));
      continue;
    }
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < 2 * n; ++k) {
        Point z = Point::Zero(n);
        z[j] = std::polar(radius, 2.0 * std::numbers::pi * k / (2.0 * n));
        grid.push_back(std::move(z));
      }
  }
  return grid;
}

double carleson_kernel_integral(const WeightedPointMeasure& nu, const Point& z) {
  require_interior(z, "carleson_kernel_integral");
  const int n = nu.dim;
  const double top = std::pow(1.0 - z.squaredNorm(), n + 1);
  double sum = 0.0;
  for (std::size_t k = 0; k < nu.points.size(); ++k)
    sum += nu.weights[k] * top / std::pow(std::norm(1.0 - inner(nu.points[k], z)), n + 1);
  return sum;
}

namespace {

template <class F>
std::vector<double> over_grid(const std::vector<Point>& zgrid, F&& f) {
  std::vector<double> values(zgrid.size());
  parallel_for(zgrid.size(), [&](std::size_t i) { values[i] = f(zgrid[i]); });
  return values;
}

double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

}  // namespace

double carleson_kernel_sup(const WeightedPointMeasure& nu, const std::vector<Point>& zgrid) {
  return max_of(over_grid(zgrid, [&](const Point& z) { return carleson_kernel_integral(nu, z); }));
}

double carleson_ball_ratio(const WeightedPointMeasure& nu, const Point& z, double r) {
  const HyperbolicBall ball = ball_params(z, r);
  double mass = 0.0;
  for (std::size_t k = 0; k < nu.points.size(); ++k)
    if (ball.contains(nu.points[k])) mass += nu.weights[k];
  return mass / ball_volume(z, r);
}

double carleson_ratio_sup(const WeightedPointMeasure& nu, double r, const std::vector<Point>& zgrid) {
  if (!(r > 0.0)) throw PreconditionError("carleson_ratio_sup: r must be positive");
  return max_of(over_grid(zgrid, [&](const Point& z) { return carleson_ball_ratio(nu, z, r); }));
}

double embedding_ratio(const WeightedPointMeasure& nu, const SampledFunction& f) {
  const auto nsq = f.norm_sq();
  if (!nsq || !(*nsq > 0.0)) throw PreconditionError("embedding_ratio: function has no known positive norm");
  double sum = 0.0;
  for (std::size_t k = 0; k < nu.points.size(); ++k) sum += nu.weights[k] * std::norm(f(nu.points[k]));
  return sum / *nsq;
}

double carleson_embedding_check(const WeightedPointMeasure& nu, const std::vector<SampledFunction>& corpus) {
  std::vector<double> values(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) { values[i] = embedding_ratio(nu, corpus[i]); });
  return max_of(values);
}

std::vector<SampledFunction> monomial_corpus(int n, int degree) {
  std::vector<SampledFunction> out;
  MultiIndex alpha(n, 0);
  // Enumerate exponents in graded lexicographic order.
  for (int total = 0; total <= degree; ++total) {
    std::vector<MultiIndex> level;
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        alpha[i] = left;
        level.push_back(alpha);
        return;
      }
      for (int a = left; a >= 0; --a) {
        alpha[i] = a;
        rec(i + 1, left - a);
      }
    };
    rec(0, total);
    for (const auto& a : level) {
      std::string label = "z^(";
      for (int i = 0; i < n; ++i) label += (i ? "," : "") + std::to_string(a[i]);
      out.push_back(SampledFunction::from_polynomial(Polynomial::monomial(a), label + ")"));
    }
  }
  return out;
}

const char* to_string(TrendVerdict v) {
  switch (v) {
    case TrendVerdict::Stable: return "stable";
    case TrendVerdict::Growing: return "growing";
    case TrendVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

TrendVerdict trend_verdict(const std::vector<double>& rungs) {
  if (rungs.size() < 2) return TrendVerdict::Inconclusive;
  bool increasing = true;
  for (std::size_t k = 1; k < rungs.size(); ++k)
    if (!(rungs[k] > rungs[k - 1])) increasing = false;
  if (increasing && rungs.back() >= 2.0 * rungs.front()) return TrendVerdict::Growing;
  if (rungs.back() <= 1.25 * rungs[rungs.size() - 2]) return TrendVerdict::Stable;
  return TrendVerdict::Inconclusive;
}

CarlesonReport carleson_ladder(const WeightedPointMeasure& nu, double r, const std::vector<SampledFunction>& corpus,
                               const std::vector<double>& shells) {
  nu.validate();
  if (shells.size() < 3) throw PreconditionError("carleson_ladder: need at least three shells");
  CarlesonReport rep;
  rep.dim = nu.dim;
  rep.r = r;
  rep.shells = shells;
  rep.directions = 2 * static_cast<std::size_t>(nu.dim) * static_cast<std::size_t>(nu.dim);
  rep.measure_points = nu.size();
  rep.measure_mass = nu.total_mass();
  rep.corpus_size = corpus.size();

  // Values per shell, so each rung is a max over a prefix.
  std::vector<double> kernel_by_shell, ratio_by_shell, kz_by_shell;
  for (double radius : shells) {
    const auto grid = default_zgrid(nu.dim, {radius});
    kernel_by_shell.push_back(carleson_kernel_sup(nu, grid));
    ratio_by_shell.push_back(carleson_ratio_sup(nu, r, grid));
    std::vector<SampledFunction> kernels;
    for (const auto& z : grid) kernels.push_back(SampledFunction::normalized_kernel(z));
    kz_by_shell.push_back(carleson_embedding_check(nu, kernels));
  }
  const double corpus_ratio = corpus.empty() ? 0.0 : carleson_embedding_check(nu, corpus);

  double k_run = kernel_by_shell[0], r_run = ratio_by_shell[0], e_run = std::max(corpus_ratio, kz_by_shell[0]);
  for (std::size_t s = 1; s < shells.size(); ++s) {
    k_run = std::max(k_run, kernel_by_shell[s]);
    r_run = std::max(r_run, ratio_by_shell[s]);
    e_run = std::max(e_run, kz_by_shell[s]);
    rep.rung_shells.emplace_back(shells.begin(), shells.begin() + static_cast<long>(s) + 1);
    rep.kernel_rungs.push_back(k_run);
    rep.ratio_rungs.push_back(r_run);
    rep.embedding_rungs.push_back(e_run);
  }
  rep.sup_kernel = rep.kernel_rungs.back();
  rep.sup_ratio = rep.ratio_rungs.back();
  rep.embedding_ratio = rep.embedding_rungs.back();
  rep.kernel_verdict = trend_verdict(rep.kernel_rungs);
  rep.ratio_verdict = trend_verdict(rep.ratio_rungs);
  rep.embedding_verdict = trend_verdict(rep.embedding_rungs);

  const auto all = [&](TrendVerdict v) {
    return rep.kernel_verdict == v && rep.ratio_verdict == v && rep.embedding_verdict == v;
  };
  rep.verdict = all(TrendVerdict::Stable) ? "carleson" : all(TrendVerdict::Growing) ? "not-carleson" : "inconclusive";
  return rep;
}

}  // namespace bergmod

#include "bergmod/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace bergmod {

GaussRule gauss_legendre(int count) {
  if (count < 1) throw PreconditionError("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const int m = (count + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1,1] -> [0,1]; weights halve so that they sum to 1.
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[count - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = rule.weights[count - 1 - i] = 0.5 * w;
  }
  return rule;
}

BallQuadrature ball_quadrature(int d, const PolarGrid& grid) {
  if (d < 1) throw PreconditionError("ball_quadrature: dimension must be positive");
  if (grid.radial < 1 || grid.angular < 1) throw PreconditionError("ball_quadrature: empty grid");
  const GaussRule g = gauss_legendre(grid.radial);
  const int nr = grid.radial, na = grid.angular;

  // Collapsed rule on the (d-1)-simplex {x >= 0, sum x = 1}.
  struct SimplexNode {
    std::vector<double> x;
    double w;
  };
  std::vector<SimplexNode> simplex{{{}, 1.0}};
  for (int j = 0; j + 1 < d; ++j) {
    std::vector<SimplexNode> next;
    for (const auto& s : simplex) {
      double used = 0.0;
      for (double v : s.x) used += v;
      const double rem = 1.0 - used;
      for (int k = 0; k < nr; ++k) {
        SimplexNode t = s;
        t.x.push_back(rem * g.nodes[k]);
        t.w *= rem * g.weights[k];
        next.push_back(std::move(t));
      }
    }
    simplex = std::move(next);
  }
  for (auto& s : simplex) {
    double used = 0.0;
    for (double v : s.x) used += v;
    s.x.push_back(std::max(0.0, 1.0 - used));
  }

  double factorial = 1.0;
  for (int k = 2; k <= d; ++k) factorial *= k;
  // d!/(2 pi)^d times the angular cell size (2 pi/na)^d.
  const double prefactor = factorial / std::pow(static_cast<double>(na), d);

  std::size_t angular_total = 1;
  for (int j = 0; j < d; ++j) angular_total *= static_cast<std::size_t>(na);

  BallQuadrature q;
  q.nodes.reserve(static_cast<std::size_t>(nr) * simplex.size() * angular_total);
  q.weights.reserve(q.nodes.capacity());
  for (int kr = 0; kr < nr; ++kr) {
    const double s_total = g.nodes[kr];
    const double wr = g.weights[kr] * std::pow(s_total, d - 1);
    for (const auto& sx : simplex) {
      for (std::size_t a = 0; a < angular_total; ++a) {
        CVector t(d);
        std::size_t code = a;
        for (int j = 0; j < d; ++j) {
          const double theta = 2.0 * std::numbers::pi * static_cast<double>(code % na) / na;
          code /= na;
          t[j] = std::polar(std::sqrt(s_total * sx.x[j]), theta);
        }
        q.nodes.push_back(std::move(t));
        q.weights.push_back(prefactor * wr * sx.w);
      }
    }
  }
  return q;
}

}  // namespace bergmod

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bergmod/common.hpp"
#include "bergmod/quadrature.hpp"

namespace bergmod {

// Nonnegative weights on points of the ball.
struct WeightedPointMeasure {
  int dim = 0;
  std::vector<Point> points;
  std::vector<double> weights;

  double total_mass() const;
  std::size_t size() const { return points.size(); }
  // Throws PreconditionError on negative/non-finite weights or bad points.
  void validate() const;
};

// Discretized normalized volume measure of B_n.
WeightedPointMeasure lebesgue_measure(int n, const PolarGrid& grid);

// (1-|w|^2)^exponent dv on B_n (not renormalized).
WeightedPointMeasure radial_density_measure(int n, double exponent, const PolarGrid& grid);

// Unit mass at a single point.
WeightedPointMeasure point_mass(const Point& p, double mass = 1.0);

// CSV with columns re_1,im_1,...,re_n,im_n,weight and a header row.
void write_measure_csv(std::ostream& out, const WeightedPointMeasure& mu);
void write_measure_csv(const std::string& path, const WeightedPointMeasure& mu);
WeightedPointMeasure read_measure_csv(std::istream& in);
WeightedPointMeasure read_measure_csv(const std::string& path);

}  // namespace bergmod

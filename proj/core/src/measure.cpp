#include "bergmod/measure.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bergmod/csv.hpp"

namespace bergmod {

double WeightedPointMeasure::total_mass() const {
  double m = 0.0;
  for (double w : weights) m += w;
  return m;
}

void WeightedPointMeasure::validate() const {
  if (points.size() != weights.size()) throw PreconditionError("measure: points and weights differ in length");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) throw PreconditionError("measure: point has wrong dimension");
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i]))
      throw PreconditionError("measure: weights must be finite and nonnegative");
    if (points[i].squaredNorm() > 1.0 + kBoundaryTol) throw PreconditionError("measure: point outside the ball");
  }
}

WeightedPointMeasure lebesgue_measure(int n, const PolarGrid& grid) {
  BallQuadrature q = ball_quadrature(n, grid);
  WeightedPointMeasure mu;
  mu.dim = n;
  mu.points = std::move(q.nodes);
  mu.weights = std::move(q.weights);
  return mu;
}

WeightedPointMeasure radial_density_measure(int n, double exponent, const PolarGrid& grid) {
  WeightedPointMeasure mu = lebesgue_measure(n, grid);
  for (std::size_t i = 0; i < mu.points.size(); ++i)
    mu.weights[i] *= std::pow(1.0 - mu.points[i].squaredNorm(), exponent);
  return mu;
}

WeightedPointMeasure point_mass(const Point& p, double mass) {
  WeightedPointMeasure mu;
  mu.dim = static_cast<int>(p.size());
  mu.points = {p};
  mu.weights = {mass};
  return mu;
}

void write_measure_csv(std::ostream& out, const WeightedPointMeasure& mu) {
  std::vector<std::string> row;
  for (int i = 1; i <= mu.dim; ++i) {
    row.push_back("re_" + std::to_string(i));
    row.push_back("im_" + std::to_string(i));
  }
  row.push_back("weight");
  csv::write_row(out, row);
  for (std::size_t k = 0; k < mu.points.size(); ++k) {
    row.clear();
    for (int i = 0; i < mu.dim; ++i) {
      row.push_back(csv::format_double(mu.points[k][i].real()));
      row.push_back(csv::format_double(mu.points[k][i].imag()));
    }
    row.push_back(csv::format_double(mu.weights[k]));
    csv::write_row(out, row);
  }
}

void write_measure_csv(const std::string& path, const WeightedPointMeasure& mu) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_measure_csv(out, mu);
  if (!out) throw IoError("failed writing " + path);
}

namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw SchemaError("measure csv: bad number '" + s + "'");
  return v;
}

}  // namespace

WeightedPointMeasure read_measure_csv(std::istream& in) {
  std::vector<std::string> row;
  if (!csv::read_row(in, row)) throw SchemaError("measure csv: empty input");
  if (row.size() < 3 || row.size() % 2 == 0 || row.back() != "weight")
    throw SchemaError("measure csv: header must be re_1,im_1,...,weight");
  WeightedPointMeasure mu;
  mu.dim = static_cast<int>((row.size() - 1) / 2);
  const std::size_t width = row.size();
  while (csv::read_row(in, row)) {
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != width) throw SchemaError("measure csv: ragged row");
    Point p(mu.dim);
    for (int i = 0; i < mu.dim; ++i) p[i] = cplx(parse_double(row[2 * i]), parse_double(row[2 * i + 1]));
    mu.points.push_back(std::move(p));
    mu.weights.push_back(parse_double(row.back()));
  }
  mu.validate();
  return mu;
}

WeightedPointMeasure read_measure_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_measure_csv(in);
}

}  // namespace bergmod

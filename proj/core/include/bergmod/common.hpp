#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace bergmod {

using cplx = std::complex<double>;
using Point = Eigen::VectorXcd;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

// Points with 1-|z|^2 below this are treated as boundary points.
inline constexpr double kInteriorTol = 1e-12;
// Allowed deviation of |x| from 1 for boundary points.
inline constexpr double kBoundaryTol = 1e-10;
// Residual allowed when checking that a point lies on a variety.
inline constexpr double kOnVarietyTol = 1e-8;
// Relative singular-value / eigenvalue cutoff for every rank decision.
inline constexpr double kRankCutoff = 1e-10;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A formula was evaluated outside its admissible domain (e.g. a vanishing
// Moebius denominator).
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

class NotOnVarietyError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::size_t achieved)
      : Error(what), achieved_(achieved) {}
  std::size_t achieved() const { return achieved_; }

 private:
  std::size_t achieved_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// <a, b> = sum_i a_i conj(b_i), linear in the first slot.
inline cplx inner(const CVector& a, const CVector& b) {
  cplx s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

inline double norm_sq(const CVector& a) { return a.squaredNorm(); }

inline void require_same_dim(const CVector& a, const CVector& b, std::string_view what) {
  if (a.size() != b.size())
    throw PreconditionError(std::string(what) + ": dimension mismatch");
}

// Throws PreconditionError unless 1-|z|^2 >= kInteriorTol.
void require_interior(const Point& z, std::string_view what);

}  // namespace bergmod

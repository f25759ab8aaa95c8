#pragma once

#include <map>
#include <vector>

#include "bergmod/common.hpp"

namespace bergmod {

using MultiIndex = std::vector<int>;

// ||z^alpha||^2 = alpha! n! / (n + |alpha|)! under the normalized volume measure.
double monomial_norm_sq(const MultiIndex& alpha, int n);

// Sparse polynomial in n complex variables with complex coefficients.
class Polynomial {
 public:
  explicit Polynomial(int num_vars = 0);

  static Polynomial constant(int num_vars, cplx c);
  static Polynomial variable(int num_vars, int index);
  static Polynomial monomial(const MultiIndex& alpha, cplx c = 1.0);

  int num_vars() const { return num_vars_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, cplx>& terms() const { return terms_; }

  void add_term(const MultiIndex& alpha, cplx c);

  cplx operator()(const CVector& z) const;
  Polynomial derivative(int var) const;

  // q(w) = p(A w) for an (num_vars x m) matrix A; q has m variables.
  Polynomial compose_linear(const CMatrix& a) const;

  // Exact Bergman inner products via monomial orthogonality.
  cplx bergman_inner(const Polynomial& other) const;
  double bergman_norm_sq() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(cplx c) const;

 private:
  int num_vars_;
  std::map<MultiIndex, cplx> terms_;
};

}  // namespace bergmod

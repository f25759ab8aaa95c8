#include "bergmod/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace bergmod {

double monomial_norm_sq(const MultiIndex& alpha, int n) {
  if (n < 1) throw PreconditionError("monomial_norm_sq: dimension must be positive");
  double value = 1.0;
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw PreconditionError("monomial_norm_sq: negative exponent");
    for (int k = 2; k <= a; ++k) value *= k;
    total += a;
  }
  for (int k = n + 1; k <= n + total; ++k) value /= k;
  return value;
}

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {}

Polynomial Polynomial::constant(int num_vars, cplx c) {
  Polynomial p(num_vars);
  p.add_term(MultiIndex(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  MultiIndex alpha(num_vars, 0);
  alpha.at(index) = 1;
  return monomial(alpha);
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, cplx c) {
  Polynomial p(static_cast<int>(alpha.size()));
  p.add_term(alpha, c);
  return p;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [alpha, c] : terms_)
    deg = std::max(deg, std::accumulate(alpha.begin(), alpha.end(), 0));
  return deg;
}

void Polynomial::add_term(const MultiIndex& alpha, cplx c) {
  if (static_cast<int>(alpha.size()) != num_vars_)
    throw PreconditionError("Polynomial: exponent length does not match variable count");
  if (c == cplx(0.0)) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx(0.0)) terms_.erase(it);
  }
}

cplx Polynomial::operator()(const CVector& z) const {
  if (z.size() != num_vars_) throw PreconditionError("Polynomial: evaluation point has wrong dimension");
  const int deg = degree();
  std::vector<std::vector<cplx>> powers(num_vars_, std::vector<cplx>(deg + 1, 1.0));
  for (int i = 0; i < num_vars_; ++i)
    for (int k = 1; k <= deg; ++k) powers[i][k] = powers[i][k - 1] * z[i];
  cplx sum = 0.0;
  for (const auto& [alpha, c] : terms_) {
    cplx term = c;
    for (int i = 0; i < num_vars_; ++i) term *= powers[i][alpha[i]];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= num_vars_) throw PreconditionError("Polynomial::derivative: bad variable");
  Polynomial d(num_vars_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[var] == 0) continue;
    MultiIndex beta = alpha;
    beta[var] -= 1;
    d.add_term(beta, c * static_cast<double>(alpha[var]));
  }
  return d;
}

Polynomial Polynomial::compose_linear(const CMatrix& a) const {
  if (a.rows() != num_vars_) throw PreconditionError("compose_linear: matrix rows must equal variable count");
  const int m = static_cast<int>(a.cols());
  std::vector<Polynomial> forms;
  for (int i = 0; i < num_vars_; ++i) {
    Polynomial li(m);
    for (int j = 0; j < m; ++j) li = li + variable(m, j) * a(i, j);
    forms.push_back(std::move(li));
  }
  Polynomial result(m);
  for (const auto& [alpha, c] : terms_) {
    Polynomial term = constant(m, c);
    for (int i = 0; i < num_vars_; ++i)
      for (int k = 0; k < alpha[i]; ++k) term = term * forms[i];
    result = result + term;
  }
  return result;
}

cplx Polynomial::bergman_inner(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) throw PreconditionError("bergman_inner: variable count mismatch");
  cplx sum = 0.0;
  for (const auto& [alpha, c] : terms_) {
    auto it = other.terms_.find(alpha);
    if (it != other.terms_.end()) sum += c * std::conj(it->second) * monomial_norm_sq(alpha, num_vars_);
  }
  return sum;
}

double Polynomial::bergman_norm_sq() const { return bergman_inner(*this).real(); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) throw PreconditionError("Polynomial: variable count mismatch");
  Polynomial r = *this;
  for (const auto& [alpha, c] : other.terms_) r.add_term(alpha, c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) throw PreconditionError("Polynomial: variable count mismatch");
  Polynomial r(num_vars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) {
      MultiIndex s(num_vars_);
      for (int i = 0; i < num_vars_; ++i) s[i] = a[i] + b[i];
      r.add_term(s, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(cplx c) const {
  Polynomial r(num_vars_);
  for (const auto& [alpha, v] : terms_) r.add_term(alpha, v * c);
  return r;
}

}  // namespace bergmod

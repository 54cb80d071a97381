#pragma once

#include <cstddef>
#include <vector>

#include "eulerprob/exactnum.hpp"

namespace eulerprob {

/// Univariate polynomial with exact rational coefficients, index = degree.
/// The trailing coefficient is nonzero unless the polynomial is zero (empty vector).
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(ExactSequence coefficients);

  const ExactSequence& coefficients() const noexcept { return coeffs_; }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of z^k, zero beyond the degree.
  ExactRational coefficient(std::size_t k) const;

  DensePolynomial derivative() const;
  ExactRational evaluate(const ExactRational& x) const;

  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;
  friend DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b);
  friend DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b);
  friend DensePolynomial operator*(const ExactRational& s, const DensePolynomial& p);

 private:
  void trim();
  ExactSequence coeffs_;
};

/// T_N from T_0 = 1, T_1 = z, T_{n+1} = 2z T_n - T_{n-1}.
DensePolynomial chebyshev_T(int N);

/// U_N from U_0 = 1, U_1 = 2z, same three-term recurrence.
DensePolynomial chebyshev_U(int N);

/// z^N T_N(1/z): the coefficient of z^j is the coefficient of z^{N-j} in T_N.
DensePolynomial reversed_T(int N);

/// Horner evaluation in double. Throws EvaluationRangeError on overflow.
double eval_float(const DensePolynomial& p, double x);

/// T_N(x) from Binet's formula for |x| >= 1, and cos(N arccos x) inside (-1, 1).
double binet_T(int N, double x);

/// log T_N(x) for x >= 1, stable for large N.
double log_binet_T(int N, double x);

/// Roots of T_N in closed form: cos((2k-1)pi/(2N)), k = 1..N.
std::vector<double> chebyshev_T_roots(int N);

}  // namespace eulerprob

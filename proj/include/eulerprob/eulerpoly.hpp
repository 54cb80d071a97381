#pragma once

#include <cstddef>

#include "eulerprob/chebyshev.hpp"
#include "eulerprob/exactnum.hpp"

namespace eulerprob {

/// Euler numbers E_n (from 1/cosh z) and Euler polynomial values E_n(0), n <= max_n.
struct EulerTable {
  int max_n = 0;
  ExactSequence euler_numbers;
  ExactSequence euler_at_zero;
};

/// E_n^(p)(x) as a polynomial in x. Monic of degree n; order 1 is the classical E_n(x).
struct PolyInX {
  DensePolynomial poly;
  int order = 1;

  int degree() const noexcept { return poly.degree(); }
  const ExactSequence& coefficients() const noexcept { return poly.coefficients(); }
  friend bool operator==(const PolyInX&, const PolyInX&) = default;
};

EulerTable euler_numbers(int max_n);

/// E_n(0) from (e^z + 1) sum E_n(0) z^n/n! = 2.
ExactSequence euler_at_zero(int max_n);

/// E_n(x) = sum_k binom(n,k) (E_k / 2^k) (x - 1/2)^{n-k}, expanded in powers of x.
PolyInX euler_poly(int n);

/// Generalized Euler numbers E_m^(p)(0), m = 0..max_n, by iterating the order recursion.
/// Rows are memoized process-wide; safe to call concurrently.
ExactSequence generalized_euler_at_zero(int max_n, int p);

/// E_n^(p)(x) = sum_k binom(n,k) x^k E_{n-k}^(p)(0). p = 0 gives x^n.
PolyInX gen_euler_recursive(int n, int p);

/// E_n^(p)(x) from the truncated series of (2/(1+e^z))^p times e^{xz}; independent of the recursion.
PolyInX gen_euler_series(int n, int p);

ExactRational eval_poly(const PolyInX& poly, const ExactRational& x);

/// E_n^(p)(x) evaluated directly from memoized E^(p)(0) rows without building the polynomial.
ExactRational eval_gen_euler(int n, int p, const ExactRational& x);

}  // namespace eulerprob

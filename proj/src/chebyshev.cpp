#include "eulerprob/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "eulerprob/errors.hpp"

namespace eulerprob {

DensePolynomial::DensePolynomial(ExactSequence coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void DensePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRational DensePolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ExactRational(0);
}

DensePolynomial DensePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  ExactSequence d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return DensePolynomial(std::move(d));
}

ExactRational DensePolynomial::evaluate(const ExactRational& x) const {
  ExactRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
  ExactSequence c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return DensePolynomial(std::move(c));
}

DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
  ExactSequence c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return DensePolynomial(std::move(c));
}

DensePolynomial operator*(const ExactRational& s, const DensePolynomial& p) {
  ExactSequence c(p.coeffs_);
  for (auto& v : c) v *= s;
  return DensePolynomial(std::move(c));
}

namespace {

DensePolynomial three_term(int N, DensePolynomial first) {
  if (N < 0) throw ParameterError("Chebyshev degree must be nonnegative");
  DensePolynomial prev(ExactSequence{1});
  if (N == 0) return prev;
  DensePolynomial cur = std::move(first);
  for (int n = 1; n < N; ++n) {
    // 2z * cur
    ExactSequence shifted(cur.coefficients().size() + 1);
    for (std::size_t k = 0; k < cur.coefficients().size(); ++k) shifted[k + 1] = 2 * cur.coefficients()[k];
    DensePolynomial next = DensePolynomial(std::move(shifted)) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

DensePolynomial chebyshev_T(int N) { return three_term(N, DensePolynomial(ExactSequence{0, 1})); }

DensePolynomial chebyshev_U(int N) { return three_term(N, DensePolynomial(ExactSequence{0, 2})); }

DensePolynomial reversed_T(int N) {
  if (N < 1) throw ParameterError("reversed_T: N must be >= 1");
  const auto t = chebyshev_T(N);
  ExactSequence r(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) r[static_cast<std::size_t>(j)] = t.coefficient(static_cast<std::size_t>(N - j));
  return DensePolynomial(std::move(r));
}

double eval_float(const DensePolynomial& p, double x) {
  double acc = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const double coeff = to_double(*it);
    if (!std::isfinite(coeff)) throw EvaluationRangeError("eval_float: coefficient not representable as double");
    acc = acc * x + coeff;
    if (!std::isfinite(acc)) throw EvaluationRangeError("eval_float: value overflowed double range");
  }
  return acc;
}

double binet_T(int N, double x) {
  if (N < 0) throw ParameterError("binet_T: N must be nonnegative");
  if (std::abs(x) < 1.0) return std::cos(N * std::acos(x));
  const double r = std::sqrt(x * x - 1.0);
  return 0.5 * (std::pow(x - r, N) + std::pow(x + r, N));
}

double log_binet_T(int N, double x) {
  if (N < 0) throw ParameterError("log_binet_T: N must be nonnegative");
  if (x < 1.0) throw ParameterError("log_binet_T: x must be >= 1");
  // T_N(x) = (w^N + w^-N)/2 with w = x + sqrt(x^2 - 1) >= 1.
  const double log_w = std::log(x + std::sqrt(x * x - 1.0));
  return N * log_w + std::log1p(std::exp(-2.0 * N * log_w)) - std::numbers::ln2;
}

std::vector<double> chebyshev_T_roots(int N) {
  if (N < 1) throw ParameterError("chebyshev_T_roots: N must be >= 1");
  std::vector<double> roots(static_cast<std::size_t>(N));
  for (int k = 1; k <= N; ++k) roots[static_cast<std::size_t>(k - 1)] = std::cos((2 * k - 1) * std::numbers::pi / (2.0 * N));
  return roots;
}

}  // namespace eulerprob

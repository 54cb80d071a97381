#include "eulerprob/eulerpoly.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "eulerprob/errors.hpp"

namespace eulerprob {

namespace {

ExactInteger factorial(int n) {
  ExactInteger r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

void check_n(int n) {
  if (n < 0) throw ParameterError("degree n must be >= 0");
}

// Rows E^(p)(0)[0..capacity] for p = 0..max order requested so far.
class GeneralizedEulerCache {
 public:
  ExactSequence row(int max_n, int p) {
    {
      std::shared_lock lock(mutex_);
      if (max_n <= capacity_ && p < static_cast<int>(rows_.size())) return prefix(rows_[static_cast<std::size_t>(p)], max_n);
    }
    std::unique_lock lock(mutex_);
    if (max_n > capacity_) rebuild(std::max(max_n, 2 * capacity_));
    while (static_cast<int>(rows_.size()) <= p) append_row();
    return prefix(rows_[static_cast<std::size_t>(p)], max_n);
  }

 private:
  static ExactSequence prefix(const ExactSequence& row, int max_n) {
    return ExactSequence(row.begin(), row.begin() + max_n + 1);
  }

  void rebuild(int capacity) {
    const auto orders = std::max<std::size_t>(rows_.size(), 2);
    capacity_ = capacity;
    base_ = euler_at_zero(capacity_);
    binom_.assign(static_cast<std::size_t>(capacity_) + 1, {});
    for (int m = 0; m <= capacity_; ++m) {
      for (int k = 0; k <= m; ++k) binom_[static_cast<std::size_t>(m)].push_back(binomial(m, k));
    }
    rows_.clear();
    ExactSequence unit(static_cast<std::size_t>(capacity_) + 1, ExactRational(0));
    unit[0] = 1;
    rows_.push_back(std::move(unit));
    while (rows_.size() < orders) append_row();
  }

  void append_row() {
    const auto& prev = rows_.back();
    ExactSequence next(static_cast<std::size_t>(capacity_) + 1);
    ExactRational term;
    for (int m = 0; m <= capacity_; ++m) {
      ExactRational acc = 0;
      for (int k = 0; k <= m; ++k) {
        const auto& b = base_[static_cast<std::size_t>(m - k)];
        if (b == 0) continue;
        term = prev[static_cast<std::size_t>(k)] * b;
        term *= binom_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
        acc += term;
      }
      next[static_cast<std::size_t>(m)] = std::move(acc);
    }
    rows_.push_back(std::move(next));
  }

  std::shared_mutex mutex_;
  int capacity_ = 0;
  ExactSequence base_{ExactRational(1)};
  std::vector<std::vector<ExactInteger>> binom_{{ExactInteger(1)}};
  std::vector<ExactSequence> rows_{ExactSequence{ExactRational(1)}, ExactSequence{ExactRational(1)}};
};

GeneralizedEulerCache& cache() {
  static GeneralizedEulerCache instance;
  return instance;
}

// Coefficients of (x + shift)^m in powers of x.
ExactSequence shifted_power(int m, const ExactRational& shift) {
  ExactSequence out(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    out[static_cast<std::size_t>(j)] = ExactRational(binomial(m, j)) * pow(shift, m - j);
  }
  return out;
}

}  // namespace

ExactSequence euler_at_zero(int max_n) {
  check_n(max_n);
  ExactSequence e(static_cast<std::size_t>(max_n) + 1);
  e[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    ExactRational acc = 0;
    for (int k = 0; k < n; ++k) acc += ExactRational(binomial(n, k)) * e[static_cast<std::size_t>(k)];
    e[static_cast<std::size_t>(n)] = -acc / 2;
  }
  return e;
}

EulerTable euler_numbers(int max_n) {
  check_n(max_n);
  EulerTable t;
  t.max_n = max_n;
  t.euler_numbers.assign(static_cast<std::size_t>(max_n) + 1, ExactRational(0));
  t.euler_numbers[0] = 1;
  // cosh z * sum E_n z^n/n! = 1: sum over even k <= 2m of binom(2m,k) E_k vanishes for m >= 1.
  for (int n = 2; n <= max_n; n += 2) {
    ExactRational acc = 0;
    for (int k = 0; k < n; k += 2) acc += ExactRational(binomial(n, k)) * t.euler_numbers[static_cast<std::size_t>(k)];
    t.euler_numbers[static_cast<std::size_t>(n)] = -acc;
  }
  t.euler_at_zero = euler_at_zero(max_n);
  return t;
}

PolyInX euler_poly(int n) {
  check_n(n);
  const auto E = euler_numbers(n).euler_numbers;
  const ExactRational minus_half(-1, 2);
  ExactSequence coeffs(static_cast<std::size_t>(n) + 1, ExactRational(0));
  for (int k = 0; k <= n; ++k) {
    if (E[static_cast<std::size_t>(k)] == 0) continue;
    const ExactRational weight =
        ExactRational(binomial(n, k)) * E[static_cast<std::size_t>(k)] / ExactRational(pow2(static_cast<std::uint64_t>(k)));
    const auto expansion = shifted_power(n - k, minus_half);
    for (std::size_t j = 0; j < expansion.size(); ++j) coeffs[j] += weight * expansion[j];
  }
  return {DensePolynomial(std::move(coeffs)), 1};
}

ExactSequence generalized_euler_at_zero(int max_n, int p) {
  check_n(max_n);
  if (p < 0) throw ParameterError("order p must be >= 0");
  return cache().row(max_n, p);
}

PolyInX gen_euler_recursive(int n, int p) {
  const auto row = generalized_euler_at_zero(n, p);
  ExactSequence coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    coeffs[static_cast<std::size_t>(k)] = ExactRational(binomial(n, k)) * row[static_cast<std::size_t>(n - k)];
  }
  return {DensePolynomial(std::move(coeffs)), p};
}

PolyInX gen_euler_series(int n, int p) {
  check_n(n);
  if (p < 0) throw ParameterError("order p must be >= 0");
  const auto len = static_cast<std::size_t>(n) + 1;

  // (1 + e^z)/2 as an ordinary power series, then its reciprocal by long division.
  ExactSequence half_sum(len);
  half_sum[0] = 1;
  for (std::size_t m = 1; m < len; ++m) half_sum[m] = ExactRational(1) / ExactRational(2 * factorial(static_cast<int>(m)));
  ExactSequence recip(len);
  for (std::size_t m = 0; m < len; ++m) {
    ExactRational acc = (m == 0) ? ExactRational(1) : ExactRational(0);
    for (std::size_t j = 1; j <= m; ++j) acc -= half_sum[j] * recip[m - j];
    recip[m] = acc;  // constant term of half_sum is 1
  }

  ExactSequence powered(len, ExactRational(0));
  if (p == 0) powered[0] = 1;
  else powered = convolution_power(recip, p, len);

  // [z^n] powered(z) e^{xz} = sum_j powered_{n-j} x^j / j!, times n!.
  const ExactInteger n_fact = factorial(n);
  ExactSequence coeffs(len);
  for (int j = 0; j <= n; ++j) {
    coeffs[static_cast<std::size_t>(j)] =
        powered[static_cast<std::size_t>(n - j)] * make_rational(n_fact, factorial(j));
  }
  return {DensePolynomial(std::move(coeffs)), p};
}

ExactRational eval_poly(const PolyInX& poly, const ExactRational& x) { return poly.poly.evaluate(x); }

ExactRational eval_gen_euler(int n, int p, const ExactRational& x) {
  const auto row = generalized_euler_at_zero(n, p);
  // Horner in x over binom(n,k) E_{n-k}^(p)(0).
  ExactRational acc = 0;
  for (int k = n; k >= 0; --k) {
    acc *= x;
    acc += ExactRational(binomial(n, k)) * row[static_cast<std::size_t>(n - k)];
  }
  return acc;
}

}  // namespace eulerprob

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eulerprob/chebyshev.hpp"
#include "eulerprob/errors.hpp"

using namespace eulerprob;

namespace {
DensePolynomial poly(std::initializer_list<long> c) {
  ExactSequence s;
  for (long v : c) s.emplace_back(v);
  return DensePolynomial(s);
}
}  // namespace

TEST_CASE("first kind") {
  CHECK(chebyshev_T(0) == poly({1}));
  CHECK(chebyshev_T(1) == poly({0, 1}));
  CHECK(chebyshev_T(2) == poly({-1, 0, 2}));
  CHECK(chebyshev_T(3) == poly({0, -3, 0, 4}));
  CHECK(chebyshev_T(4) == poly({1, 0, -8, 0, 8}));
  for (int N = 1; N <= 30; ++N) {
    const auto t = chebyshev_T(N);
    REQUIRE(t.degree() == N);
    REQUIRE(t.coefficients().back() == ExactRational(pow2(static_cast<std::uint64_t>(N - 1))));
  }
  CHECK_THROWS_AS(chebyshev_T(-1), ParameterError);
}

TEST_CASE("second kind") {
  CHECK(chebyshev_U(0) == poly({1}));
  CHECK(chebyshev_U(1) == poly({0, 2}));
  CHECK(chebyshev_U(3) == poly({0, -4, 0, 8}));
}

TEST_CASE("reversed first kind") {
  CHECK(reversed_T(1) == poly({1}));
  CHECK(reversed_T(2) == poly({2, 0, -1}));
  CHECK(reversed_T(4) == poly({8, 0, -8, 0, 1}));
  CHECK_THROWS_AS(reversed_T(0), ParameterError);
}

TEST_CASE("derivative, parity and value at one") {
  for (int N = 1; N <= 50; ++N) {
    const auto t = chebyshev_T(N);
    REQUIRE(t.derivative() == ExactRational(N) * chebyshev_U(N - 1));
    for (std::size_t k = 0; k < t.coefficients().size(); ++k) {
      if ((static_cast<int>(k) - N) % 2 != 0) REQUIRE(t.coefficients()[k] == 0);
    }
    REQUIRE(t.evaluate(ExactRational(1)) == 1);
  }
}

TEST_CASE("float evaluation") {
  CHECK(eval_float(chebyshev_T(2), 2.0) == doctest::Approx(7.0));
  const double theta = 0.3;
  CHECK(std::abs(eval_float(chebyshev_T(3), std::cos(theta)) - std::cos(3 * theta)) < 1e-12);
  CHECK(eval_float(DensePolynomial(), 5.0) == 0.0);
  CHECK_THROWS_AS(eval_float(chebyshev_T(40), 1e300), EvaluationRangeError);
}

namespace {
// T_N(x) by the three-term recurrence, stable on [-1, 1].
double recurrence_T(int N, double x) {
  double prev = 1.0;
  double cur = x;
  if (N == 0) return prev;
  for (int n = 1; n < N; ++n) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Sum of |c_k| |x|^k: the scale of the rounding error in Horner evaluation.
double horner_scale(const DensePolynomial& p, double x) {
  double acc = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * std::abs(x) + std::abs(to_double(*it));
  return acc;
}
}  // namespace

TEST_CASE("roots from the closed form") {
  // Horner on the monomial coefficients is ill-conditioned for large N, so it is
  // only used up to N = 12; the recurrence covers the rest.
  for (int N = 1; N <= 12; ++N) {
    const auto t = chebyshev_T(N);
    for (double r : chebyshev_T_roots(N)) REQUIRE(std::abs(eval_float(t, r)) < 1e-10);
  }
  for (int N = 1; N <= 50; ++N) {
    for (double r : chebyshev_T_roots(N)) REQUIRE(std::abs(recurrence_T(N, r)) < 1e-10);
  }
}

TEST_CASE("Binet form") {
  CHECK(binet_T(2, 2.0) == doctest::Approx(7.0).epsilon(1e-12));
  for (int N = 1; N <= 12; ++N) CHECK(binet_T(N, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(binet_T(3, 0.5) == doctest::Approx(-1.0).epsilon(1e-12));
  for (int N = 1; N <= 25; ++N) {
    const auto t = chebyshev_T(N);
    for (double x : {-3.0, -1.5, -0.9, -0.2, 0.0, 0.4, 0.95, 1.0, 1.3, 2.5}) {
      const double coeff = eval_float(t, x);
      const double binet = binet_T(N, x);
      const double tol = 1e-10 * std::max(1.0, std::abs(coeff)) + 1e-13 * horner_scale(t, x);
      REQUIRE(std::abs(binet - coeff) <= tol);
    }
    REQUIRE(log_binet_T(N, 2.5) == doctest::Approx(std::log(binet_T(N, 2.5))).epsilon(1e-12));
  }
}

#include <doctest.h>

#include <thread>

#include "eulerprob/errors.hpp"
#include "eulerprob/eulerpoly.hpp"
#include "oracles.hpp"

using namespace eulerprob;

namespace {
PolyInX px(std::initializer_list<ExactRational> c, int order) {
  return {DensePolynomial(ExactSequence(c)), order};
}
}  // namespace

TEST_CASE("Euler numbers") {
  const auto t = euler_numbers(31);
  CHECK(t.euler_numbers[0] == 1);
  CHECK(t.euler_numbers[2] == -1);
  CHECK(t.euler_numbers[4] == 5);
  CHECK(t.euler_numbers[6] == -61);
  CHECK(t.euler_numbers[3] == 0);
  CHECK(t.euler_numbers == oracle::euler_numbers_by_reciprocal(31));
  for (int n = 1; n <= 31; n += 2) REQUIRE(t.euler_numbers[static_cast<std::size_t>(n)] == 0);
  for (int m = 0; 2 * m <= 30; ++m) {
    const auto& e = t.euler_numbers[static_cast<std::size_t>(2 * m)];
    REQUIRE((m % 2 == 0 ? e > 0 : e < 0));
  }
}

TEST_CASE("Euler polynomial values at zero") {
  const auto e = euler_at_zero(10);
  CHECK(e[0] == 1);
  CHECK(e[1] == make_rational(-1, 2));
  CHECK(e[2] == 0);
  CHECK(e[3] == make_rational(1, 4));
  CHECK(euler_numbers(10).euler_at_zero == e);
}

TEST_CASE("Euler polynomials") {
  CHECK(euler_poly(0) == px({1}, 1));
  CHECK(euler_poly(1) == px({make_rational(-1, 2), 1}, 1));
  CHECK(euler_poly(2) == px({0, -1, 1}, 1));
  for (int n = 0; n <= 30; ++n) {
    const auto p = euler_poly(n);
    REQUIRE(p.degree() == n);
    REQUIRE(p.coefficients().back() == 1);
    const auto En = euler_numbers(n).euler_numbers[static_cast<std::size_t>(n)];
    REQUIRE(En == ExactRational(pow2(static_cast<std::uint64_t>(n))) * eval_poly(p, make_rational(1, 2)));
    REQUIRE(eval_poly(p, 0) == euler_at_zero(n)[static_cast<std::size_t>(n)]);
  }
  CHECK(eval_poly(euler_poly(1), make_rational(1, 2)) == 0);
  CHECK(eval_poly(euler_poly(2), 1) == 0);
  CHECK(eval_poly(px({1}, 1), make_rational(-17, 3)) == 1);
}

TEST_CASE("generalized Euler polynomials: recursive path") {
  for (int p = 1; p <= 20; ++p) {
    CHECK(gen_euler_recursive(1, p) == px({make_rational(-p, 2), 1}, p));
  }
  CHECK(gen_euler_recursive(2, 1) == euler_poly(2));
  CHECK(gen_euler_recursive(2, 2) == px({make_rational(1, 2), -2, 1}, 2));
  CHECK(gen_euler_recursive(4, 0) == px({0, 0, 0, 0, 1}, 0));
  for (int n = 0; n <= 15; ++n) REQUIRE(gen_euler_recursive(n, 1) == euler_poly(n));
  CHECK_THROWS_AS(gen_euler_recursive(-1, 2), ParameterError);
  CHECK_THROWS_AS(gen_euler_recursive(2, -1), ParameterError);
}

TEST_CASE("generalized Euler polynomials: series path") {
  CHECK(gen_euler_series(0, 7) == px({1}, 7));
  CHECK(gen_euler_series(1, 3) == px({make_rational(-3, 2), 1}, 3));
  CHECK(gen_euler_series(3, 2) == gen_euler_recursive(3, 2));
  CHECK(gen_euler_series(5, 0) == gen_euler_recursive(5, 0));
}

TEST_CASE("the two generalized algorithms agree") {
  for (int n = 0; n <= 12; ++n) {
    for (int p = 1; p <= 20; ++p) {
      const auto a = gen_euler_recursive(n, p);
      REQUIRE(a == gen_euler_series(n, p));
      REQUIRE(a.degree() == n);
      REQUIRE(a.coefficients().back() == 1);
    }
  }
}

TEST_CASE("direct evaluation matches the polynomial") {
  const ExactRational x = make_rational(3, 7);
  for (int n = 0; n <= 8; ++n) {
    for (int p : {1, 2, 5, 40}) REQUIRE(eval_gen_euler(n, p, x) == eval_poly(gen_euler_recursive(n, p), x));
  }
}

TEST_CASE("memoized rows are safe under concurrent readers") {
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([t, &ok] {
      bool good = true;
      for (int p = 1; p <= 60; ++p) {
        const int n = 3 + (t + p) % 9;
        good = good && generalized_euler_at_zero(n, p).size() == static_cast<std::size_t>(n) + 1;
      }
      ok[static_cast<std::size_t>(t)] = good;
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 1);
  CHECK(gen_euler_recursive(11, 60) == gen_euler_series(11, 60));
}

#include <doctest.h>

#include <random>

#include "eulerprob/errors.hpp"
#include "eulerprob/exactnum.hpp"
#include "oracles.hpp"

using namespace eulerprob;

TEST_CASE("binomial matches Pascal triangle and is total") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(40, 20) == oracle::pascal_binom(40, 20));
  CHECK(binomial(40, 20) == ExactInteger("137846528820"));
  const auto tri = oracle::pascal(60);
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) {
      REQUIRE(binomial(n, k) == tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
      REQUIRE(binomial(n, k) == binomial(n, n - k));
    }
  }
  CHECK_THROWS_AS(binomial(-1, 0), ParameterError);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan_number(0) == 1);
  CHECK(catalan_number(4) == oracle::pascal_binom(8, 4) / 5);
  CHECK(catalan_number(4) == 14);
  CHECK(catalan_number(10) == 16796);
}

TEST_CASE("ballot numbers") {
  CHECK(ballot_A(1, 0) == 1);
  CHECK(ballot_A(1, 2) == -1);
  CHECK(ballot_A(5, 2) == 5);
  // Nonnegative inside the Catalan-triangle region 0 <= 2k <= n+1.
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; 2 * k <= n + 1; ++k) REQUIRE(ballot_A(n, k) >= 0);
  }
}

TEST_CASE("rational normalization and parsing") {
  const auto r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(make_rational(10, 5)) == "2");
  CHECK(parse_rational("3/7") == make_rational(3, 7));
  CHECK(parse_rational("-2/3") == make_rational(-2, 3));
  CHECK(parse_rational("5") == 5);
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 gen(12345);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const auto a = make_rational(num(gen), den(gen));
    const auto b = make_rational(num(gen), den(gen));
    ExactRational sum = a + b;
    REQUIRE(ExactRational(sum - b) == a);
    ExactRational renorm = sum;
    renorm.canonicalize();
    REQUIRE(renorm == sum);
    REQUIRE(sum.get_den() > 0);
    REQUIRE(gcd(sum.get_num(), sum.get_den()) == 1);
  }
}

TEST_CASE("convolution") {
  const ExactSequence one_one{1, 1};
  CHECK(convolve(one_one, one_one) == ExactSequence{1, 2, 1});
  const ExactSequence s{3, make_rational(1, 2), -7};
  CHECK(convolve(ExactSequence{1}, s) == s);
  const ExactSequence cat{1, 1, 2, 5};
  const auto sq = convolve(cat, cat);
  CHECK(sq.size() == 7);
  CHECK(ExactSequence(sq.begin(), sq.begin() + 4) == ExactSequence{1, 2, 5, 14});
  CHECK(sq == oracle::naive_convolve(cat, cat));
  CHECK_THROWS_AS(convolve(ExactSequence{}, s), ParameterError);
}

TEST_CASE("convolution power") {
  CHECK(convolution_power(ExactSequence{1, 1, 2, 5}, 1) == ExactSequence{1, 1, 2, 5});
  const auto p2 = convolution_power(ExactSequence{1, 1, 2, 5, 14}, 2);
  CHECK(ExactSequence(p2.begin(), p2.begin() + 4) == ExactSequence{1, 2, 5, 14});
  CHECK(p2 == oracle::iterated_power(ExactSequence{1, 1, 2, 5, 14}, 2));
  CHECK(convolution_power(ExactSequence{1, 1}, 3) == ExactSequence{1, 3, 3, 1});
  CHECK_THROWS_AS(convolution_power(ExactSequence{1}, 0), ParameterError);

  // Squaring path equals iterated convolution for random inputs.
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::uniform_int_distribution<int> length(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    ExactSequence a(static_cast<std::size_t>(length(gen)));
    for (auto& v : a) v = make_rational(coeff(gen), 1 + (coeff(gen) + 20) % 7);
    for (int power = 1; power <= 8; ++power) {
      const auto full = convolution_power(a, power);
      REQUIRE(full == oracle::iterated_power(a, power));
      const std::size_t len = std::min<std::size_t>(5, full.size());
      const auto truncated = convolution_power(a, power, len);
      REQUIRE(truncated == ExactSequence(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(len)));
    }
  }
}

TEST_CASE("power-of-two denominators") {
  CHECK(denominator_divides_pow2(make_rational(3, 8), 3));
  CHECK_FALSE(denominator_divides_pow2(make_rational(3, 8), 2));
  CHECK_FALSE(denominator_divides_pow2(make_rational(1, 6), 10));
  CHECK(denominator_divides_pow2(ExactRational(5), 0));
  CHECK(pow(make_rational(-2, 3), 3) == make_rational(-8, 27));
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
}

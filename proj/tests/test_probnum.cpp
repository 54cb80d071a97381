#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eulerprob/errors.hpp"
#include "eulerprob/probnum.hpp"
#include "oracles.hpp"

using namespace eulerprob;

TEST_CASE("series values for small N") {
  const auto t2 = probnum_series(2, 6);
  CHECK(t2.method == ProbMethod::series);
  CHECK(t2.exact[2] == make_rational(1, 2));
  CHECK(t2.exact[4] == make_rational(1, 4));
  CHECK(t2.exact[6] == make_rational(1, 8));
  CHECK(t2.exact[1] == 0);
  CHECK(t2.exact[3] == 0);
  CHECK(t2.exact[5] == 0);

  const auto t3 = probnum_series(3, 5);
  CHECK(t3.exact[3] == make_rational(1, 4));
  CHECK(t3.exact[5] == make_rational(3, 16));

  const auto t4 = probnum_series(4, 40);
  CHECK(t4.exact[4] == make_rational(1, 8));
  CHECK(t4.exact[6] == make_rational(1, 8));
  CHECK(t4.exact[8] == make_rational(7, 64));
  CHECK(t4.exact == oracle::n4_law(40));

  const auto t1 = probnum_series(1, 5);
  CHECK(t1.exact == ExactSequence{0, 1, 0, 0, 0, 0});

  CHECK_THROWS_AS(probnum_series(4, 3), ParameterError);
  CHECK_THROWS_AS(probnum_series(0, 3), ParameterError);
}

TEST_CASE("trig formula") {
  const auto t2 = probnum_trig(2, 3);
  CHECK(t2.exact.empty());
  CHECK(std::abs(t2.approx[2] - 0.5) < 1e-15);
  CHECK(std::abs(t2.approx[3]) < 1e-14);
  CHECK(std::abs(probnum_trig(3, 3).approx[3] - 0.25) < 1e-14);
}

TEST_CASE("Catalan-triangle formula") {
  CHECK(probnum_catalan(2, 2) == make_rational(1, 2));
  CHECK(probnum_catalan(3, 3) == make_rational(1, 4));
  CHECK(probnum_catalan(2, 6) == make_rational(1, 8));
  CHECK_THROWS_AS(probnum_catalan(3, 4), ParameterError);
  CHECK_THROWS_AS(probnum_catalan(2, 0), ParameterError);
  for (int N = 1; N <= 12; ++N) {
    const auto series = probnum_series(N, 80);
    for (int ell = 1; ell <= 80; ++ell) {
      if ((ell - N) % 2 != 0) continue;
      const auto c = probnum_catalan(N, ell);
      REQUIRE(c == series.exact[static_cast<std::size_t>(ell)]);
      REQUIRE(denominator_divides_pow2(c, static_cast<std::uint64_t>(ell)));
    }
  }
}

TEST_CASE("N = 4 closed form") {
  const auto exact = oracle::n4_law(40);
  for (int ell = 0; ell <= 40; ++ell) {
    REQUIRE(std::abs(probnum_n4_closed_form(ell) - to_double(exact[static_cast<std::size_t>(ell)])) < 1e-12);
  }
}

TEST_CASE("f_N geometric sum") {
  using namespace std::complex_literals;
  CHECK(std::abs(f_N(2, 2.0) - oracle::f_N_direct(2, 2.0)) < 1e-12);
  CHECK(std::abs(f_N(3, 3.0) - 3.0i) < 1e-12);
  CHECK(std::abs(f_N(3, 9.0) + 3.0i) < 1e-12);
  CHECK(std::abs(f_N(1, 0.0) - 1.0) < 1e-12);
  for (int N = 1; N <= 9; ++N) {
    for (double z = -25.0; z <= 25.0; z += 0.25) {
      REQUIRE(std::abs(f_N(N, z) - oracle::f_N_direct(N, z)) < 1e-9);
    }
  }
}

TEST_CASE("root angles") {
  const auto a = root_angles(5);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].k == static_cast<int>(i) + 1);
    CHECK(a[i].theta > 0.0);
    CHECK(a[i].theta < std::numbers::pi);
    if (i) CHECK(a[i].theta > a[i - 1].theta);
  }
}

TEST_CASE("cross validation") {
  const auto r = cross_validate(2, 40, 1e-10);
  CHECK(r.passed);
  CHECK(r.max_trig_deviation < 1e-12);
  CHECK(cross_validate(7, 60, 1e-10).passed);
  CHECK_THROWS_AS(cross_validate(4, 3, 1e-10), ParameterError);
  CHECK_THROWS_AS(cross_validate(4, 10, 0.0), ParameterError);
  // An impossible tolerance surfaces as a validation failure naming the pair.
  try {
    cross_validate(9, 60, 1e-30);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("series vs trig") != std::string::npos);
  }
}

TEST_CASE("tail mass") {
  CHECK(tail_mass(2, 20) == 0.0009765625);
  CHECK(tail_mass(2, 2) == 0.5);
  double prev = 1.0;
  for (int m = 5; m <= 200; m += 5) {
    const double t = tail_mass(5, m);
    REQUIRE(t <= prev);
    REQUIRE(t >= 0.0);
    prev = t;
  }
  CHECK(probnum_series(2, 20).tail_bound == 0.0009765625);
}

TEST_CASE("tail mass against the root-sum tail") {
  // sum_{ell > M} p_ell = (1/N) sum_k (-1)^{k+1} sin(theta_k) cos^M(theta_k) / (1 - cos(theta_k))
  for (int N = 2; N <= 10; ++N) {
    for (int M : {N, 50, 120, 200}) {
      double tail = 0.0;
      for (int k = 1; k <= N; ++k) {
        const double th = (2 * k - 1) * std::numbers::pi / (2.0 * N);
        tail += (k % 2 == 1 ? 1.0 : -1.0) * std::sin(th) * std::pow(std::cos(th), M) / (1.0 - std::cos(th));
      }
      tail /= N;
      REQUIRE(tail_mass(N, M) == doctest::Approx(tail).epsilon(1e-9));
    }
  }
  // Geometric decay at rate cos(pi/(2N)) leaves less than 1e-6 beyond ell = 200 only for N <= 4.
  for (int N = 1; N <= 4; ++N) CHECK(tail_mass(N, 200) < 1e-6);
  CHECK(tail_mass(5, 200) > 1e-6);
}

TEST_CASE("table invariants") {
  for (int N = 1; N <= 12; ++N) {
    const auto t = probnum_series(N, 120);
    ExactRational partial = 0;
    for (int ell = 0; ell <= 120; ++ell) {
      const auto& v = t.exact[static_cast<std::size_t>(ell)];
      if (ell < N || (ell - N) % 2 != 0) REQUIRE(v == 0);
      REQUIRE(v >= 0);
      REQUIRE(denominator_divides_pow2(v, static_cast<std::uint64_t>(ell)));
      partial += v;
      REQUIRE(partial <= 1);
    }
  }
}

TEST_CASE("online stream matches table") {
  ProbNumberStream s(6);
  const auto t = probnum_series(6, 50);
  for (int ell = 0; ell <= 50; ++ell) {
    CHECK(s.position() == ell);
    REQUIRE(s.next() == t.exact[static_cast<std::size_t>(ell)]);
  }
}

TEST_CASE("method names") {
  CHECK(parse_prob_method("catalan") == ProbMethod::catalan);
  CHECK(to_string(ProbMethod::trig) == "trig");
  CHECK_THROWS_AS(parse_prob_method("newton"), ParameterError);
}

#include "eulerprob/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "eulerprob/errors.hpp"

namespace eulerprob {

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

ExactInteger parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return ExactInteger(std::string(s), 10);
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw std::invalid_argument("not an integer or a/b rational: '" + std::string(text) + "'");
    }
    return ExactRational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not an integer or a/b rational: '" + std::string(text) + "'");
  }
  const ExactInteger d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(num), d);
}

std::string to_string(const ExactRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const ExactInteger& value) { return value.get_str(); }

double to_double(const ExactRational& value) {
  return mpq_get_d(value.get_mpq_t());
}

ExactInteger pow2(std::uint64_t exponent) {
  ExactInteger r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

ExactRational pow(const ExactRational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(ExactRational(1) / base, -exponent);
  }
  ExactInteger num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // A canonical base stays canonical under powers.
  return ExactRational(num, den);
}

ExactInteger binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw ParameterError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactInteger catalan_number(std::int64_t n) {
  if (n < 0) throw ParameterError("catalan_number: n must be nonnegative");
  ExactInteger r = binomial(2 * n, n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return r;
}

ExactInteger ballot_A(std::int64_t n, std::int64_t k) {
  return binomial(n, k) - binomial(n, k - 1);
}

ExactSequence convolve(const ExactSequence& a, const ExactSequence& b, std::size_t length) {
  if (a.empty() || b.empty()) throw ParameterError("convolve: sequences must be nonempty");
  ExactSequence c(length);
  ExactRational term;
  for (std::size_t n = 0; n < length; ++n) {
    const std::size_t j_lo = n >= b.size() ? n - b.size() + 1 : 0;
    const std::size_t j_hi = std::min(n, a.size() - 1);
    for (std::size_t j = j_lo; j <= j_hi && j_lo <= j_hi; ++j) {
      if (a[j] == 0 || b[n - j] == 0) continue;
      term = a[j] * b[n - j];
      c[n] += term;
    }
  }
  return c;
}

ExactSequence convolve(const ExactSequence& a, const ExactSequence& b) {
  if (a.empty() || b.empty()) throw ParameterError("convolve: sequences must be nonempty");
  return convolve(a, b, a.size() + b.size() - 1);
}

ExactSequence convolution_power(const ExactSequence& a, int power, std::size_t length) {
  if (power < 1) throw ParameterError("convolution_power: power must be >= 1");
  if (a.empty()) throw ParameterError("convolution_power: sequence must be nonempty");
  ExactSequence result;
  ExactSequence base(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(length, a.size())));
  if (base.empty()) return {};
  bool have_result = false;
  for (int e = power; e > 0; e >>= 1) {
    if (e & 1) {
      result = have_result ? convolve(result, base, length) : base;
      have_result = true;
    }
    if (e > 1) base = convolve(base, base, length);
  }
  result.resize(length);
  return result;
}

ExactSequence convolution_power(const ExactSequence& a, int power) {
  if (power < 1) throw ParameterError("convolution_power: power must be >= 1");
  if (a.empty()) throw ParameterError("convolution_power: sequence must be nonempty");
  return convolution_power(a, power, static_cast<std::size_t>(power) * (a.size() - 1) + 1);
}

bool denominator_divides_pow2(const ExactRational& value, std::uint64_t exponent) {
  const auto& den = value.get_den();
  const auto twos = mpz_scan1(den.get_mpz_t(), 0);
  ExactInteger odd;
  mpz_tdiv_q_2exp(odd.get_mpz_t(), den.get_mpz_t(), twos);
  return odd == 1 && twos <= exponent;
}

}  // namespace eulerprob

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eulerprob {

/// Arbitrary-precision integer. Zero has a single representation.
using ExactInteger = mpz_class;

/// Arbitrary-precision rational, always kept canonical: gcd(num, den) = 1, den > 0.
using ExactRational = mpq_class;

/// Finite sequence indexed from 0.
using ExactSequence = std::vector<ExactRational>;

/// Builds num/den in canonical form. Throws std::domain_error on a zero denominator.
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

/// Parses "a/b" or an integer literal. Decimals and exponents are rejected.
/// Throws std::invalid_argument on malformed input.
ExactRational parse_rational(std::string_view text);

/// "num/den", with "/den" omitted when den == 1.
std::string to_string(const ExactRational& value);
std::string to_string(const ExactInteger& value);

/// Nearest double (GMP truncation semantics for very large magnitudes).
double to_double(const ExactRational& value);

/// 2^exponent as an exact integer.
ExactInteger pow2(std::uint64_t exponent);

/// Exact integer power of a rational; negative exponents invert.
ExactRational pow(const ExactRational& base, std::int64_t exponent);

// Total binomial: zero when k < 0 or k > n.
ExactInteger binomial(std::int64_t n, std::int64_t k);

ExactInteger catalan_number(std::int64_t n);

/// Catalan-triangle entry binom(n,k) - binom(n,k-1). Negative outside the triangle is allowed.
ExactInteger ballot_A(std::int64_t n, std::int64_t k);

/// Cauchy product; output length len(a) + len(b) - 1.
ExactSequence convolve(const ExactSequence& a, const ExactSequence& b);

/// Cauchy product truncated to the first `length` terms.
ExactSequence convolve(const ExactSequence& a, const ExactSequence& b, std::size_t length);

/// N-fold self-convolution, by binary powering. Full length N*(len(a)-1)+1.
ExactSequence convolution_power(const ExactSequence& a, int power);

/// Same, truncated to the first `length` terms at every step.
ExactSequence convolution_power(const ExactSequence& a, int power, std::size_t length);

/// True when the denominator of `value` divides 2^exponent.
bool denominator_divides_pow2(const ExactRational& value, std::uint64_t exponent);

}  // namespace eulerprob

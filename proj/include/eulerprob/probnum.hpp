#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "eulerprob/exactnum.hpp"

namespace eulerprob {

enum class ProbMethod { series, trig, catalan };

std::string_view to_string(ProbMethod method);
/// Throws ParameterError for an unknown name.
ProbMethod parse_prob_method(std::string_view name);

/// Prefix p_0..p_max_ell of the law of mu_N, the coefficients of 1/T_N(1/z).
///
/// `exact` is populated for the series and catalan methods and empty for trig;
/// `approx` always holds double values. `tail_bound` bounds the mass beyond max_ell.
struct ProbTable {
  int N = 0;
  int max_ell = 0;
  ProbMethod method = ProbMethod::series;
  ExactSequence exact;
  std::vector<double> approx;
  double tail_bound = 1.0;

  bool is_exact() const noexcept { return !exact.empty(); }
};

struct RootAngle {
  int k;
  double theta;  // (2k-1) pi / (2N)
};

/// theta_k for k = 1..N, strictly increasing in (0, pi).
std::vector<RootAngle> root_angles(int N);

/// Online generator of p_0, p_1, ... for fixed N by long division of z^N by z^N T_N(1/z).
/// Each call to next() costs O(N) exact operations.
class ProbNumberStream {
 public:
  explicit ProbNumberStream(int N);

  int N() const noexcept { return N_; }
  /// Index of the value the next call to next() returns.
  std::int64_t position() const noexcept { return position_; }
  ExactRational next();

 private:
  int N_;
  std::int64_t position_ = 0;
  ExactSequence divisor_;     // reversed T_N, ascending powers
  ExactRational lead_inv_;    // 1 / 2^{N-1}
  ExactSequence reciprocal_;  // coefficients of 1 / reversed T_N computed so far
};

/// Exact values by truncated series reciprocal. Throws ParameterError if max_ell < N.
ProbTable probnum_series(int N, int max_ell);

/// Double values from the root-sum formula with compensated summation.
ProbTable probnum_trig(int N, int max_ell);

/// Single value from the Catalan-triangle formula.
/// Requires ell = N (mod 2); throws ParameterError otherwise.
ExactRational probnum_catalan(int N, int ell);

/// Whole table via probnum_catalan, with zeros filled in for the vanishing indices.
ProbTable probnum_catalan_table(int N, int max_ell);

/// Float closed form for N = 4 from the sqrt(2) partial fractions; zero for odd ell and ell = 2.
double probnum_n4_closed_form(int ell);

/// sum_{k=1}^N (-1)^{k+1} e^{i theta_k z}, in closed form with the limit case at odd multiples of N.
std::complex<double> f_N(int N, double z);

struct CrossValidationReport {
  int N = 0;
  int max_ell = 0;
  double max_trig_deviation = 0.0;
  int worst_ell = 0;
  bool passed = false;
};

/// Checks series == catalan exactly and |series - trig| <= tol for every ell <= max_ell.
/// Throws ValidationError naming (N, ell, method pair) on the first mismatch.
CrossValidationReport cross_validate(int N, int max_ell, double tol);

/// Upper bound (rounded up to double) on 1 - sum_{ell <= max_ell} p_ell.
double tail_mass(int N, int max_ell);

/// Smallest double >= value.
double round_up(const ExactRational& value);

}  // namespace eulerprob

#pragma once

#include <cstdint>
#include <vector>

#include "eulerprob/exactnum.hpp"

namespace eulerprob {

/// Truncation of E_n(x) = N^{-n} sum_{k >= N} p_k^(N) E_n^(k)(k/2 + N(x - 1/2)).
struct ReconstructionResult {
  int n = 0;
  int N = 0;
  ExactRational x;
  /// Number of nonzero-weight terms summed (k = N, N+2, ...).
  int terms_used = 0;
  /// Largest k included.
  std::int64_t last_k = 0;
  ExactRational partial_value;
  ExactRational target;
  double abs_error = 0.0;
  /// Geometric extrapolation of the remaining tail from the last term and rate cos^2(pi/(2N)).
  double tail_estimate = 0.0;
  /// First k whose term magnitude fell below tol/10; -1 if none did.
  std::int64_t first_small_term_k = -1;
};

struct ReconstructionOptions {
  double tol = 1e-9;
  /// Maximum number of nonzero-weight terms.
  int max_terms = 20000;
};

/// Sums the series with exact arithmetic until |partial - E_n(x)| <= tol.
/// Requires N >= 2, tol > 0. Throws ConvergenceError (carrying the achieved error) past the budget.
ReconstructionResult reconstruct_euler(int n, int N, const ExactRational& x, const ReconstructionOptions& options);
ReconstructionResult reconstruct_euler(int n, int N, const ExactRational& x, double tol);

/// |sum_k p_k^(N) E_n^(k)(k/2) - N^n E_n(1/2)| after summing to within `tol` (default 1e-12).
ExactRational expectation_form_check(int n, int N, double tol = 1e-12, int max_terms = 20000);

/// q_ell = 2^{ell-1} p_ell^(N), ell = 0..max_ell.
ExactSequence q_sequence(int N, int max_ell);

/// phi_N(z) ((1 + sqrt(1 - z^2))/z)^N with phi_N = 1/T_N(1/z) from the Binet form. Requires 0 < z < 1.
double asymptotic_ratio(int N, double z);

/// Same ratio with phi_N taken from the product over the roots cos(theta_k).
double asymptotic_ratio_product(int N, double z);

struct PrefixMismatch {
  int k;
  ExactRational q_value;
  ExactRational convolution_value;
};

struct CatalanPrefixReport {
  int N = 0;
  /// k = 0..N-1 checked against (C^{*N})_k.
  int prefix_checked = 0;
  std::vector<PrefixMismatch> mismatches;
  /// Index of the first nonzero coefficient of (sum C_n z^{2n+1})^N - sum q_ell z^ell; -1 if none through 3N.
  int valuation = -1;
  /// Coefficient at the valuation index.
  ExactRational leading_difference;
  bool passed = false;
};

CatalanPrefixReport catalan_prefix_check(int N);

struct CatalanGfReport {
  int order = 0;
  /// Coefficients of z S(z)^2 - S(z) + 1 through z^order.
  ExactSequence residual;
  bool passed = false;
};

CatalanGfReport catalan_gf_check(int order);

}  // namespace eulerprob

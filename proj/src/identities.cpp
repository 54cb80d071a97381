#include "eulerprob/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "eulerprob/errors.hpp"
#include "eulerprob/eulerpoly.hpp"
#include "eulerprob/probnum.hpp"

namespace eulerprob {

namespace {

ExactRational abs_value(const ExactRational& v) { return v < 0 ? ExactRational(-v) : v; }

}  // namespace

ReconstructionResult reconstruct_euler(int n, int N, const ExactRational& x, const ReconstructionOptions& options) {
  if (n < 0) throw ParameterError("reconstruct_euler: n must be >= 0");
  if (N < 2) throw ParameterError("reconstruct_euler: N must be >= 2");
  if (!(options.tol > 0.0)) throw ParameterError("reconstruct_euler: tol must be > 0");
  if (options.max_terms < 1) throw ParameterError("reconstruct_euler: max_terms must be >= 1");

  ReconstructionResult r;
  r.n = n;
  r.N = N;
  r.x = x;
  r.target = eval_poly(euler_poly(n), x);

  const ExactRational tol(options.tol);
  const ExactRational small_term = tol / 10;
  const ExactRational inv_scale = ExactRational(1) / pow(ExactRational(N), n);
  const ExactRational shift = ExactRational(N) * (x - ExactRational(1, 2));
  const double rate = std::pow(std::cos(std::numbers::pi / (2.0 * N)), 2);

  ProbNumberStream weights(N);
  ExactRational sum = 0;
  ExactRational error;
  ExactRational term;
  while (true) {
    const std::int64_t k = weights.position();
    const ExactRational p = weights.next();
    if (p == 0) continue;
    term = p * eval_gen_euler(n, static_cast<int>(k), ExactRational(k, 2) + shift) * inv_scale;
    term.canonicalize();
    sum += term;
    ++r.terms_used;
    r.last_k = k;
    if (r.first_small_term_k < 0 && abs_value(term) < small_term) r.first_small_term_k = k;
    error = abs_value(sum - r.target);
    if (error <= tol) break;
    if (r.terms_used >= options.max_terms) {
      std::ostringstream os;
      os << "reconstruct_euler(n=" << n << ", N=" << N << ", x=" << to_string(x) << ") did not reach tol "
         << options.tol << " within " << options.max_terms << " terms; achieved " << to_double(error);
      throw ConvergenceError(os.str(), to_double(error));
    }
  }
  r.partial_value = sum;
  r.abs_error = to_double(error);
  r.tail_estimate = std::abs(to_double(term)) * rate / (1.0 - rate);
  return r;
}

ReconstructionResult reconstruct_euler(int n, int N, const ExactRational& x, double tol) {
  ReconstructionOptions options;
  options.tol = tol;
  return reconstruct_euler(n, N, x, options);
}

ExactRational expectation_form_check(int n, int N, double tol, int max_terms) {
  if (n < 0) throw ParameterError("expectation_form_check: n must be >= 0");
  if (N < 2) throw ParameterError("expectation_form_check: N must be >= 2");
  if (!(tol > 0.0)) throw ParameterError("expectation_form_check: tol must be > 0");
  const auto E = euler_numbers(n).euler_numbers;
  // N^n E_n(1/2) = N^n E_n / 2^n
  const ExactRational target =
      pow(ExactRational(N), n) * E[static_cast<std::size_t>(n)] / ExactRational(pow2(static_cast<std::uint64_t>(n)));
  const ExactRational bound(tol);
  ProbNumberStream weights(N);
  ExactRational sum = 0;
  ExactRational diff = abs_value(target);
  int terms = 0;
  while (true) {
    const std::int64_t k = weights.position();
    const ExactRational p = weights.next();
    if (p == 0) continue;
    sum += p * eval_gen_euler(n, static_cast<int>(k), ExactRational(k, 2));
    ++terms;
    diff = abs_value(sum - target);
    if (diff <= bound) return diff;
    if (terms >= max_terms) {
      std::ostringstream os;
      os << "expectation_form_check(n=" << n << ", N=" << N << ") did not reach " << tol << "; achieved "
         << to_double(diff);
      throw ConvergenceError(os.str(), to_double(diff));
    }
  }
}

ExactSequence q_sequence(int N, int max_ell) {
  if (max_ell < 0) throw ParameterError("q_sequence: max_ell must be >= 0");
  ProbNumberStream stream(N);
  ExactSequence q(static_cast<std::size_t>(max_ell) + 1);
  for (int ell = 0; ell <= max_ell; ++ell) {
    const ExactRational p = stream.next();
    q[static_cast<std::size_t>(ell)] = ell == 0 ? ExactRational(p / 2) : ExactRational(p * pow2(static_cast<std::uint64_t>(ell - 1)));
  }
  return q;
}

namespace {

void check_ratio_args(int N, double z) {
  if (N < 1) throw ParameterError("asymptotic_ratio: N must be >= 1");
  if (!(z > 0.0 && z < 1.0)) throw ParameterError("asymptotic_ratio: z must lie in (0, 1)");
}

}  // namespace

double asymptotic_ratio(int N, double z) {
  check_ratio_args(N, z);
  // With w = (1 + sqrt(1 - z^2))/z, Binet gives T_N(1/z) = (w^N + w^-N)/2, so
  // phi_N(z) w^N = 2 / (1 + w^{-2N}). The w^N factors cancel before rounding.
  const double log_w = std::log((1.0 + std::sqrt(1.0 - z * z)) / z);
  return 2.0 / (1.0 + std::exp(-2.0 * N * log_w));
}

double asymptotic_ratio_product(int N, double z) {
  check_ratio_args(N, z);
  double log_sum = 0.0;
  for (const auto& a : root_angles(N)) log_sum += std::log1p(-z * std::cos(a.theta));
  const double log_phi = std::numbers::ln2 + N * std::log(z / 2.0) - log_sum;
  const double log_w = std::log((1.0 + std::sqrt(1.0 - z * z)) / z);
  return std::exp(log_phi + N * log_w);
}

CatalanPrefixReport catalan_prefix_check(int N) {
  if (N < 1) throw ParameterError("catalan_prefix_check: N must be >= 1");
  CatalanPrefixReport report;
  report.N = N;
  const int top = 3 * N;
  const auto q = q_sequence(N, top);

  ExactSequence catalan(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) catalan[static_cast<std::size_t>(i)] = ExactRational(catalan_number(i));
  const auto conv = convolution_power(catalan, N, static_cast<std::size_t>(N) + 1);

  for (int k = 0; k < N; ++k) {
    const auto& qv = q[static_cast<std::size_t>(N + 2 * k)];
    const auto& cv = conv[static_cast<std::size_t>(k)];
    if (qv != cv) report.mismatches.push_back({k, qv, cv});
  }
  report.prefix_checked = N;

  // (sum C_n z^{2n+1})^N = z^N sum_k conv_k z^{2k}
  for (int ell = 0; ell <= top; ++ell) {
    ExactRational lhs = 0;
    if (ell >= N && (ell - N) % 2 == 0) lhs = conv[static_cast<std::size_t>((ell - N) / 2)];
    const ExactRational diff = lhs - q[static_cast<std::size_t>(ell)];
    if (diff != 0) {
      report.valuation = ell;
      report.leading_difference = diff;
      break;
    }
  }
  report.passed = report.mismatches.empty() && report.valuation == top;
  return report;
}

CatalanGfReport catalan_gf_check(int order) {
  if (order < 1) throw ParameterError("catalan_gf_check: order must be >= 1");
  CatalanGfReport report;
  report.order = order;
  const auto len = static_cast<std::size_t>(order) + 1;
  ExactSequence s(len);
  for (std::size_t i = 0; i < len; ++i) s[i] = ExactRational(catalan_number(static_cast<std::int64_t>(i)));
  const auto sq = convolve(s, s, len);
  report.residual.assign(len, ExactRational(0));
  for (std::size_t i = 0; i < len; ++i) {
    ExactRational v = -s[i];
    if (i == 0) v += 1;
    else v += sq[i - 1];
    report.residual[i] = v;
  }
  report.passed = std::all_of(report.residual.begin(), report.residual.end(), [](const ExactRational& v) { return v == 0; });
  return report;
}

}  // namespace eulerprob

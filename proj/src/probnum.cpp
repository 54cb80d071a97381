#include "eulerprob/probnum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "eulerprob/chebyshev.hpp"
#include "eulerprob/errors.hpp"

namespace eulerprob {

std::string_view to_string(ProbMethod method) {
  switch (method) {
    case ProbMethod::series: return "series";
    case ProbMethod::trig: return "trig";
    case ProbMethod::catalan: return "catalan";
  }
  return "unknown";
}

ProbMethod parse_prob_method(std::string_view name) {
  if (name == "series") return ProbMethod::series;
  if (name == "trig") return ProbMethod::trig;
  if (name == "catalan") return ProbMethod::catalan;
  throw ParameterError("unknown method '" + std::string(name) + "'");
}

std::vector<RootAngle> root_angles(int N) {
  if (N < 1) throw ParameterError("root_angles: N must be >= 1");
  std::vector<RootAngle> out;
  out.reserve(static_cast<std::size_t>(N));
  for (int k = 1; k <= N; ++k) out.push_back({k, (2 * k - 1) * std::numbers::pi / (2.0 * N)});
  return out;
}

ProbNumberStream::ProbNumberStream(int N) : N_(N) {
  if (N < 1) throw ParameterError("ProbNumberStream: N must be >= 1");
  divisor_ = reversed_T(N).coefficients();
  lead_inv_ = ExactRational(1) / divisor_[0];
}

ExactRational ProbNumberStream::next() {
  const std::int64_t ell = position_++;
  if (ell < N_) return 0;
  const auto m = static_cast<std::size_t>(ell - N_);
  ExactRational acc = (m == 0) ? ExactRational(1) : ExactRational(0);
  const std::size_t j_max = std::min(m, divisor_.size() - 1);
  for (std::size_t j = 1; j <= j_max; ++j) {
    if (divisor_[j] == 0) continue;
    acc -= divisor_[j] * reciprocal_[m - j];
  }
  acc *= lead_inv_;
  reciprocal_.push_back(acc);
  return acc;
}

double round_up(const ExactRational& value) {
  double d = to_double(value);
  if (ExactRational(d) < value) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

namespace {

void check_table_args(int N, int max_ell) {
  if (N < 1) throw ParameterError("N must be >= 1");
  if (max_ell < N) {
    throw ParameterError("max_ell (" + std::to_string(max_ell) + ") must be >= N (" + std::to_string(N) + ")");
  }
}

double exact_tail(const ExactSequence& values) {
  ExactRational remaining = 1;
  for (const auto& v : values) remaining -= v;
  return round_up(remaining);
}

std::vector<double> to_doubles(const ExactSequence& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_double(v));
  return out;
}

bool parity_matches(int N, int ell) { return ((N - ell) % 2 + 2) % 2 == 0; }

// floor(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace

ProbTable probnum_series(int N, int max_ell) {
  check_table_args(N, max_ell);
  ProbTable t;
  t.N = N;
  t.max_ell = max_ell;
  t.method = ProbMethod::series;
  ProbNumberStream stream(N);
  t.exact.reserve(static_cast<std::size_t>(max_ell) + 1);
  for (int ell = 0; ell <= max_ell; ++ell) t.exact.push_back(stream.next());
  t.approx = to_doubles(t.exact);
  t.tail_bound = exact_tail(t.exact);
  return t;
}

ProbTable probnum_trig(int N, int max_ell) {
  check_table_args(N, max_ell);
  const auto angles = root_angles(N);
  ProbTable t;
  t.N = N;
  t.max_ell = max_ell;
  t.method = ProbMethod::trig;
  t.approx.assign(static_cast<std::size_t>(max_ell) + 1, 0.0);
  for (int ell = 1; ell <= max_ell; ++ell) {
    // Neumaier summation over the alternating root terms.
    double sum = 0.0;
    double comp = 0.0;
    for (const auto& a : angles) {
      const double sign = (a.k % 2 == 1) ? 1.0 : -1.0;
      const double term = sign * std::sin(a.theta) * std::pow(std::cos(a.theta), ell - 1);
      const double s = sum + term;
      comp += (std::abs(sum) >= std::abs(term)) ? (sum - s) + term : (term - s) + sum;
      sum = s;
    }
    t.approx[static_cast<std::size_t>(ell)] = (sum + comp) / N;
  }
  double partial = 0.0;
  for (double v : t.approx) partial += v;
  t.tail_bound = std::max(0.0, 1.0 - partial);
  return t;
}

ExactRational probnum_catalan(int N, int ell) {
  if (N < 1 || ell < 1) throw ParameterError("probnum_catalan: N and ell must be >= 1");
  if (!parity_matches(N, ell)) {
    std::ostringstream os;
    os << "probnum_catalan: parity mismatch, ell=" << ell << " is not congruent to N=" << N << " mod 2";
    throw ParameterError(os.str());
  }
  const std::int64_t L = ell;
  const std::int64_t n = N;
  const ExactInteger denom = pow2(static_cast<std::uint64_t>(ell));
  ExactInteger acc = 0;

  const bool odd_multiple = (L % n == 0) && ((L / n) % 2 == 1);
  if (!odd_multiple) {
    // t from floor(((2 - ell)/N - 1)/2) to floor((ell/N - 1)/2).
    const std::int64_t t_lo = floor_div(2 - L - n, 2 * n);
    const std::int64_t t_hi = floor_div(L - n, 2 * n);
    for (std::int64_t t = t_lo; t <= t_hi; ++t) {
      const std::int64_t r = (L - (2 * t + 1) * n) / 2;
      const ExactInteger a = ballot_A(L - 1, r);
      if (t % 2 == 0) acc += a; else acc -= a;
    }
    return make_rational(acc, denom);
  }

  // ell = (2k+1) N; the s-sum runs to ell/N - 1 = 2k.
  const std::int64_t k = (L / n - 1) / 2;
  for (std::int64_t s = 1; s <= L / n - 1; ++s) {
    const ExactInteger a = ballot_A(L - 1, s * n);
    if ((k - s) % 2 == 0) acc += a; else acc -= a;
  }
  // (-1)^k / 2^{ell-1} = 2 (-1)^k / 2^ell
  if (k % 2 == 0) acc += 2; else acc -= 2;
  return make_rational(acc, denom);
}

ProbTable probnum_catalan_table(int N, int max_ell) {
  check_table_args(N, max_ell);
  ProbTable t;
  t.N = N;
  t.max_ell = max_ell;
  t.method = ProbMethod::catalan;
  t.exact.assign(static_cast<std::size_t>(max_ell) + 1, ExactRational(0));
  for (int ell = 1; ell <= max_ell; ++ell) {
    if (parity_matches(N, ell)) t.exact[static_cast<std::size_t>(ell)] = probnum_catalan(N, ell);
  }
  t.approx = to_doubles(t.exact);
  t.tail_bound = exact_tail(t.exact);
  return t;
}

double probnum_n4_closed_form(int ell) {
  if (ell < 0) throw ParameterError("probnum_n4_closed_form: ell must be >= 0");
  if (ell % 2 != 0 || ell < 4) return 0.0;
  const int half = ell / 2;
  const double r2 = std::numbers::sqrt2;
  return r2 / std::ldexp(1.0, 2 * half + 1) * (std::pow(2.0 + r2, half - 1) - std::pow(2.0 - r2, half - 1));
}

std::complex<double> f_N(int N, double z) {
  if (N < 1) throw ParameterError("f_N: N must be >= 1");
  using namespace std::complex_literals;
  const double ratio = z / N;
  const double nearest = std::round(ratio);
  if (ratio == nearest && std::fmod(std::abs(nearest), 2.0) == 1.0) {
    const auto t = static_cast<std::int64_t>((nearest - 1.0) / 2.0);
    return (t % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(N) * 1i;
  }
  const double denom = 2.0 * std::cos(std::numbers::pi * z / (2.0 * N));
  if (std::abs(denom) < 1e-8) {
    // Too close to the removable singularity for the quotient; sum directly.
    std::complex<double> acc = 0.0;
    for (const auto& a : root_angles(N)) {
      acc += (a.k % 2 == 1 ? 1.0 : -1.0) * std::exp(1i * (a.theta * z));
    }
    return acc;
  }
  const double sign_N = (N % 2 == 0) ? 1.0 : -1.0;
  return (1.0 - sign_N * std::exp(1i * (std::numbers::pi * z))) / denom;
}

CrossValidationReport cross_validate(int N, int max_ell, double tol) {
  if (!(tol > 0.0)) throw ParameterError("cross_validate: tol must be > 0");
  check_table_args(N, max_ell);
  const auto series = probnum_series(N, max_ell);
  const auto catalan = probnum_catalan_table(N, max_ell);
  const auto trig = probnum_trig(N, max_ell);
  CrossValidationReport report;
  report.N = N;
  report.max_ell = max_ell;
  for (int ell = 0; ell <= max_ell; ++ell) {
    const auto i = static_cast<std::size_t>(ell);
    if (series.exact[i] != catalan.exact[i]) {
      std::ostringstream os;
      os << "validation failure N=" << N << " ell=" << ell << " (series vs catalan): "
         << to_string(series.exact[i]) << " != " << to_string(catalan.exact[i]);
      throw ValidationError(os.str());
    }
    const double dev = std::abs(series.approx[i] - trig.approx[i]);
    if (dev > report.max_trig_deviation) {
      report.max_trig_deviation = dev;
      report.worst_ell = ell;
    }
    if (dev > tol) {
      std::ostringstream os;
      os << "validation failure N=" << N << " ell=" << ell << " (series vs trig): deviation " << dev
         << " exceeds " << tol;
      throw ValidationError(os.str());
    }
  }
  report.passed = true;
  return report;
}

double tail_mass(int N, int max_ell) {
  check_table_args(N, max_ell);
  ProbNumberStream stream(N);
  ExactRational remaining = 1;
  for (int ell = 0; ell <= max_ell; ++ell) remaining -= stream.next();
  return round_up(remaining);
}

}  // namespace eulerprob

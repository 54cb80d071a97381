#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulerprob/exactnum.hpp"

namespace eulerprob {

/// Counter-based deterministic random source.
///
/// Draw i of stream (seed, stream_id) is a fixed 64-bit mixing function of
/// (seed, stream_id, i), so the output depends only on those three values and
/// is identical on every platform. Children produced by split() are
/// independent streams addressed by a child index.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t draws() const noexcept { return counter_; }

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double next_uniform();
  RandomStream split(std::uint64_t child) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Draws from the density sech(pi x) by inversion: x = ln(tan(pi u / 2)) / pi.
std::vector<double> sample_sech(RandomStream& stream, std::size_t count);

/// CDF of the density sech(pi x): (2/pi) arctan(e^{pi x}).
double sech_cdf(double x);

/// Inverse-CDF sampler for mu_N over an exact probability table.
///
/// The table is extended until the tabled mass exceeds 1 - 1e-15. A uniform
/// falling beyond the table maps to the smallest untabled support point and is
/// counted in residual_events().
class MuSampler {
 public:
  explicit MuSampler(int N, double residual_mass = 1e-15);

  int N() const noexcept { return N_; }
  std::int64_t sample(RandomStream& stream);
  std::int64_t from_uniform(double u);
  std::size_t residual_events() const noexcept { return residual_events_; }
  /// Largest tabled support point.
  std::int64_t max_tabled() const noexcept { return support_.back(); }
  /// 1 - tabled mass, rounded up.
  double untabled_mass() const noexcept { return untabled_mass_; }
  /// sum ell p_ell over the table (exact, then rounded).
  double tabled_mean() const noexcept { return tabled_mean_; }

 private:
  int N_;
  std::vector<std::int64_t> support_;
  std::vector<double> cdf_;
  std::size_t residual_events_ = 0;
  double untabled_mass_ = 0.0;
  double tabled_mean_ = 0.0;
};

/// `count` draws of mu_N. Requires N >= 2. Every value is >= N and has the parity of N.
std::vector<std::int64_t> sample_mu(RandomStream& stream, int N, std::size_t count);

struct MomentEstimate {
  std::string label;
  double empirical = 0.0;
  double standard_error = 0.0;
  double reference = 0.0;
  /// (empirical - reference) / standard_error; 0 when both the error and the deviation vanish.
  double standardized_deviation = 0.0;
};

struct KsResult {
  double statistic = 0.0;
  /// Asymptotic critical value at the 1% level.
  double critical_value = 0.0;
  bool passed() const noexcept { return statistic <= critical_value; }
};

struct MomentReport {
  std::size_t sample_size = 0;
  std::vector<MomentEstimate> estimates;
  double max_standardized_deviation = 0.0;
  std::optional<KsResult> ks;
  /// mu_N draws that landed beyond the exact table.
  std::size_t residual_events = 0;

  bool within_band(double band) const noexcept;
};

/// Monte Carlo estimate of E_n(x) = E[(x - 1/2 + iL)^n]. Requires n <= 8, count >= 10^4.
MomentReport mc_euler_poly(RandomStream& stream, int n, const ExactRational& x, std::size_t count);

/// Monte Carlo estimate of E_n^(p)(x) from p i.i.d. sech variables. Requires n <= 6, 1 <= p <= 10.
MomentReport mc_gen_euler(RandomStream& stream, int n, int p, const ExactRational& x, std::size_t count);

/// Moments of orders 1, 2, 4, 6 of (1/N) sum_{j <= mu_N} L_j against |E_k|/2^k, plus a
/// two-sample KS test against direct sech draws. Requires N >= 2, count >= 10^5.
MomentReport mc_klebanov(RandomStream& stream, int N, std::size_t count);

/// |integral of t^k sech(pi t) dt - |E_k|/2^k| by adaptive Gauss-Kronrod quadrature over the real line.
/// Requires 0 <= k <= 12. For odd k the quadrature value itself is returned.
double moment_integral_check(int k);

/// sup |F_n - F| for the empirical CDF of `samples` against sech_cdf.
double ks_statistic_sech(std::vector<double> samples);

/// Two-sample KS statistic.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

/// Monte Carlo draws are split across this many child streams; results do not depend on thread count.
inline constexpr std::size_t kMonteCarloPartitions = 16;

}  // namespace eulerprob

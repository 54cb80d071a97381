#include "eulerprob/stochastic.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

#include "eulerprob/errors.hpp"
#include "eulerprob/eulerpoly.hpp"
#include "eulerprob/probnum.hpp"

namespace eulerprob {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), key_(mix64(seed ^ mix64(stream_id + kGolden))) {}

std::uint64_t RandomStream::next_u64() {
  // SplitMix64 output function applied to a keyed Weyl sequence.
  return mix64(key_ + (++counter_) * kGolden);
}

double RandomStream::next_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

RandomStream RandomStream::split(std::uint64_t child) const {
  return RandomStream(seed_, mix64(stream_id_ * kGolden + mix64(child + 1)));
}

double sech_cdf(double x) { return 2.0 / std::numbers::pi * std::atan(std::exp(std::numbers::pi * x)); }

std::vector<double> sample_sech(RandomStream& stream, std::size_t count) {
  if (count < 1) throw ParameterError("sample_sech: count must be >= 1");
  std::vector<double> out(count);
  for (auto& v : out) v = std::log(std::tan(std::numbers::pi / 2.0 * stream.next_uniform())) / std::numbers::pi;
  return out;
}

MuSampler::MuSampler(int N, double residual_mass) : N_(N) {
  if (N < 2) throw ParameterError("MuSampler: N must be >= 2");
  ProbNumberStream stream(N);
  const ExactRational threshold(residual_mass);
  ExactRational cumulative = 0;
  ExactRational mean = 0;
  for (std::int64_t ell = 0;; ++ell) {
    const ExactRational p = stream.next();
    if (p == 0) continue;
    cumulative += p;
    mean += p * ell;
    support_.push_back(ell);
    cdf_.push_back(to_double(cumulative));
    if (ExactRational(1) - cumulative <= threshold) break;
  }
  untabled_mass_ = round_up(ExactRational(1) - cumulative);
  tabled_mean_ = to_double(mean);
}

std::int64_t MuSampler::from_uniform(double u) {
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) {
    ++residual_events_;
    return support_.back() + 2;
  }
  return support_[static_cast<std::size_t>(it - cdf_.begin())];
}

std::int64_t MuSampler::sample(RandomStream& stream) { return from_uniform(stream.next_uniform()); }

namespace {

// Process-wide table per N; construction is the expensive part.
const MuSampler& shared_mu_table(int N) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const MuSampler>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[N];
  if (!slot) slot = std::make_unique<const MuSampler>(N);
  return *slot;
}

// Runs body(child_stream, begin, end) over a fixed partition of [0, count).
// The partition and child streams depend only on the parent stream, never on threading.
void run_partitioned(RandomStream& stream, std::size_t count,
                     const std::function<void(RandomStream&, std::size_t, std::size_t, std::size_t)>& body) {
  const RandomStream base(stream.seed(), stream.next_u64());
  const std::size_t parts = std::min(kMonteCarloPartitions, count);
  std::vector<std::thread> workers;
  const std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
  std::size_t next_part = 0;
  std::mutex next_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t part;
      {
        std::lock_guard lock(next_mutex);
        if (next_part == parts) return;
        part = next_part++;
      }
      RandomStream child = base.split(part);
      const std::size_t begin = count * part / parts;
      const std::size_t end = count * (part + 1) / parts;
      body(child, part, begin, end);
    }
  };
  const std::size_t threads = std::min(hw, parts);
  for (std::size_t t = 1; t < threads; ++t) workers.emplace_back(worker);
  worker();
  for (auto& w : workers) w.join();
}

MomentEstimate estimate(std::string label, const std::vector<double>& values, double reference) {
  // Two-pass mean and variance.
  MomentEstimate e;
  e.label = std::move(label);
  e.reference = reference;
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  e.empirical = mean;
  e.standard_error = values.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  const double dev = mean - reference;
  if (e.standard_error > 0.0) e.standardized_deviation = dev / e.standard_error;
  else e.standardized_deviation = dev == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return e;
}

void finish(MomentReport& report) {
  report.max_standardized_deviation = 0.0;
  for (const auto& e : report.estimates) {
    report.max_standardized_deviation = std::max(report.max_standardized_deviation, std::abs(e.standardized_deviation));
  }
}

std::complex<double> int_power(std::complex<double> base, int n) {
  std::complex<double> acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

MomentReport complex_power_report(RandomStream& stream, int n, double real_shift, int summands, double reference,
                                  std::size_t count) {
  std::vector<double> re(count);
  std::vector<double> im(count);
  run_partitioned(stream, count, [&](RandomStream& child, std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double imag = 0.0;
      for (int j = 0; j < summands; ++j) {
        imag += std::log(std::tan(std::numbers::pi / 2.0 * child.next_uniform())) / std::numbers::pi;
      }
      const auto v = int_power({real_shift, imag}, n);
      re[i] = v.real();
      im[i] = v.imag();
    }
  });
  MomentReport report;
  report.sample_size = count;
  report.estimates.push_back(estimate("real", re, reference));
  report.estimates.push_back(estimate("imag", im, 0.0));
  finish(report);
  return report;
}

double critical_value_1pct(std::size_t n, std::size_t m) {
  // c(0.01) = sqrt(-ln(0.005)/2)
  const double c = std::sqrt(-std::log(0.005) / 2.0);
  const auto nn = static_cast<double>(n);
  const auto mm = static_cast<double>(m);
  return c * std::sqrt((nn + mm) / (nn * mm));
}

}  // namespace

bool MomentReport::within_band(double band) const noexcept { return max_standardized_deviation <= band; }

std::vector<std::int64_t> sample_mu(RandomStream& stream, int N, std::size_t count) {
  if (N < 2) throw ParameterError("sample_mu: N must be >= 2");
  MuSampler sampler = shared_mu_table(N);
  std::vector<std::int64_t> out(count);
  for (auto& v : out) v = sampler.sample(stream);
  return out;
}

MomentReport mc_euler_poly(RandomStream& stream, int n, const ExactRational& x, std::size_t count) {
  if (n < 0 || n > 8) throw ParameterError("mc_euler_poly: n must lie in 0..8");
  if (count < 10000) throw ParameterError("mc_euler_poly: count must be >= 10^4");
  const double reference = to_double(eval_poly(euler_poly(n), x));
  return complex_power_report(stream, n, to_double(x) - 0.5, 1, reference, count);
}

MomentReport mc_gen_euler(RandomStream& stream, int n, int p, const ExactRational& x, std::size_t count) {
  if (n < 0 || n > 6) throw ParameterError("mc_gen_euler: n must lie in 0..6");
  if (p < 1 || p > 10) throw ParameterError("mc_gen_euler: p must lie in 1..10");
  if (count < 2) throw ParameterError("mc_gen_euler: count must be >= 2");
  const double reference = to_double(eval_gen_euler(n, p, x));
  return complex_power_report(stream, n, to_double(x) - 0.5 * p, p, reference, count);
}

MomentReport mc_klebanov(RandomStream& stream, int N, std::size_t count) {
  if (N < 2) throw ParameterError("mc_klebanov: N must be >= 2");
  if (count < 100000) throw ParameterError("mc_klebanov: count must be >= 10^5");
  const MuSampler& table = shared_mu_table(N);
  std::vector<double> sums(count);
  std::vector<double> direct(count);
  std::vector<std::size_t> residual(kMonteCarloPartitions, 0);
  run_partitioned(stream, count, [&](RandomStream& child, std::size_t part, std::size_t begin, std::size_t end) {
    MuSampler sampler = table;
    RandomStream reference_stream = child.split(0);
    for (std::size_t i = begin; i < end; ++i) {
      const std::int64_t mu = sampler.sample(child);
      double s = 0.0;
      for (std::int64_t j = 0; j < mu; ++j) {
        s += std::log(std::tan(std::numbers::pi / 2.0 * child.next_uniform())) / std::numbers::pi;
      }
      sums[i] = s / N;
      direct[i] = std::log(std::tan(std::numbers::pi / 2.0 * reference_stream.next_uniform())) / std::numbers::pi;
    }
    residual[part] = sampler.residual_events();
  });

  const auto E = euler_numbers(6).euler_numbers;
  MomentReport report;
  report.sample_size = count;
  std::vector<double> powered(count);
  for (int order : {1, 2, 4, 6}) {
    for (std::size_t i = 0; i < count; ++i) powered[i] = std::pow(sums[i], order);
    const double ref = order % 2 == 1 ? 0.0 : to_double(abs(E[static_cast<std::size_t>(order)]) / ExactRational(pow2(static_cast<std::uint64_t>(order))));
    report.estimates.push_back(estimate("moment_" + std::to_string(order), powered, ref));
  }
  KsResult ks;
  ks.statistic = ks_statistic_two_sample(sums, direct);
  ks.critical_value = critical_value_1pct(count, count);
  report.ks = ks;
  for (auto r : residual) report.residual_events += r;
  finish(report);
  return report;
}

double moment_integral_check(int k) {
  if (k < 0 || k > 12) throw ParameterError("moment_integral_check: k must lie in 0..12");
  using boost::math::quadrature::gauss_kronrod;
  const auto integrand = [k](double t) {
    const double a = std::abs(t);
    // sech(pi t) = 2 e^{-pi|t|} / (1 + e^{-2 pi |t|})
    const double e = std::exp(-std::numbers::pi * a);
    const double sech = 2.0 * e / (1.0 + e * e);
    return std::pow(t, k) * sech;
  };
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (k % 2 == 1) return gauss_kronrod<double, 61>::integrate(integrand, -inf, inf, 20, 1e-15);
  const double value = 2.0 * gauss_kronrod<double, 61>::integrate(integrand, 0.0, inf, 20, 1e-15);
  const auto E = euler_numbers(k).euler_numbers;
  const ExactRational exact = abs(E[static_cast<std::size_t>(k)]) / ExactRational(pow2(static_cast<std::uint64_t>(k)));
  return std::abs(value - to_double(exact));
}

double ks_statistic_sech(std::vector<double> samples) {
  if (samples.empty()) throw ParameterError("ks_statistic_sech: empty sample");
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = sech_cdf(samples[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw ParameterError("ks_statistic_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

}  // namespace eulerprob

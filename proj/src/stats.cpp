#include "summax/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace summax {

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * double(j) * double(j) * lambda * lambda);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = double(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, f - double(i) / n);
    d = std::max(d, double(i + 1) / n - f);
  }
  const double sqrt_n = std::sqrt(n);
  const double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
  return {d, kolmogorov_q(lambda)};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = double(a.size()), nb = double(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    d = std::max(d, std::abs(double(i) / na - double(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_q(ne * d)};
}

double ks_distance_se(double distance, std::size_t n, std::size_t m) {
  const double ne = double(n) * double(m) / double(n + m);
  const double p = std::clamp(distance, 1e-6, 1.0 - 1e-6);
  return std::sqrt(p * (1.0 - p) / ne);
}

double mean(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / double(xs.size());
}

double variance(std::span<const double> xs) {
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / double(xs.size());
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median: empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double median_se(std::vector<double> xs) {
  if (xs.size() < 4) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  const double half_width = 0.5 * std::sqrt(double(n));
  const std::size_t lo = std::size_t(std::max(0.0, double(n) / 2.0 - half_width));
  const std::size_t hi = std::size_t(std::min(double(n - 1), double(n) / 2.0 + half_width));
  return 0.5 * (xs[hi] - xs[lo]);
}

double regression_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("regression_slope: need matched samples of size >= 2");
  }
  const double mx = mean(x), my = mean(y);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

ChiSquare poisson_chi_square(std::span<const std::uint64_t> counts, double mean_rate) {
  if (counts.empty()) throw std::invalid_argument("poisson_chi_square: empty counts");
  const double n = double(counts.size());
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t max_count = 0;
  for (std::uint64_t c : counts) {
    ++histogram[c];
    max_count = std::max(max_count, c);
  }
  // Cells 0..max_count plus one tail cell carrying the remaining mass;
  // neighbouring cells are pooled until each expected count reaches 5.
  std::vector<double> expected{0.0};
  std::vector<double> observed{0.0};
  double pmf = std::exp(-mean_rate);
  double mass = 0.0;
  for (std::uint64_t k = 0; k <= max_count; ++k) {
    const auto it = histogram.find(k);
    if (expected.back() >= 5.0) {
      expected.push_back(0.0);
      observed.push_back(0.0);
    }
    expected.back() += n * pmf;
    observed.back() += it != histogram.end() ? double(it->second) : 0.0;
    mass += pmf;
    pmf *= mean_rate / double(k + 1);
  }
  expected.back() += n * std::max(0.0, 1.0 - mass);
  double stat = 0.0;
  std::size_t bins = 0;
  for (std::size_t b = 0; b < expected.size(); ++b) {
    if (expected[b] <= 0.0) continue;
    const double diff = observed[b] - expected[b];
    stat += diff * diff / expected[b];
    ++bins;
  }
  return ChiSquare{stat, bins > 1 ? bins - 1 : 1};
}

}  // namespace summax

#include "summax/innovations.hpp"

#include <cmath>
#include <stdexcept>

namespace summax {

void validate(const InnovationSpec& spec) {
  validate(spec.tail);
  if (spec.kind == InnovationKind::gauss_copula_ar1) {
    if (!(spec.phi >= 0.0 && spec.phi < 1.0)) {
      throw std::invalid_argument("innovations.phi must lie in [0,1)");
    }
  }
}

double std_normal_cdf(double g) { return 0.5 * std::erfc(-g * M_SQRT1_2); }

InnovationPath sample_underlying_gaussian(const InnovationSpec& spec, std::uint64_t n,
                                          std::uint64_t pre_history, std::uint64_t seed,
                                          std::uint64_t rep) {
  validate(spec);
  if (n < 1) throw std::invalid_argument("sample_path: n must be >= 1");
  RngStream rng = make_stream(seed, StreamPurpose::innovations, rep);
  const std::size_t count = std::size_t(n + pre_history);
  InnovationPath path;
  path.first_index = 1 - std::int64_t(pre_history);
  path.values.resize(count);
  const double phi = spec.kind == InnovationKind::gauss_copula_ar1 ? spec.phi : 0.0;
  const double scale = std::sqrt(1.0 - phi * phi);
  double g = rng.next_normal();  // stationary N(0,1) start
  path.values[0] = g;
  for (std::size_t i = 1; i < count; ++i) {
    g = phi * g + scale * rng.next_normal();
    path.values[i] = g;
  }
  return path;
}

InnovationPath sample_path(const InnovationSpec& spec, std::uint64_t n,
                           std::uint64_t pre_history, std::uint64_t seed,
                           std::uint64_t rep) {
  InnovationPath path = sample_underlying_gaussian(spec, n, pre_history, seed, rep);
  for (double& v : path.values) {
    v = quantile(spec.tail, std_normal_cdf(v));
  }
  return path;
}

DPrimeEstimate dprime_statistic(const InnovationSpec& spec, std::uint64_t n,
                                std::uint64_t k, double x, std::uint64_t reps,
                                std::uint64_t seed) {
  validate(spec);
  if (k < 1 || reps < 1) throw std::invalid_argument("dprime_statistic: k, reps >= 1");
  if (!(x > 0.0)) throw std::invalid_argument("dprime_statistic: x must be positive");
  const std::uint64_t m = n / k;
  const double threshold = x * a_n(spec.tail, n);
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    const InnovationPath path = sample_path(spec, m + 1, 0, seed, rep);
    double hits = 0.0;
    if (std::abs(path.at(1)) > threshold) {
      for (std::uint64_t i = 1; i <= m; ++i) {
        if (std::abs(path.at(std::int64_t(i) + 1)) > threshold) hits += 1.0;
      }
    }
    sum += hits;
    sumsq += hits * hits;
  }
  const double mean = sum / double(reps);
  const double var = std::max(0.0, sumsq / double(reps) - mean * mean);
  const double se = std::sqrt(var / double(reps));
  return DPrimeEstimate{double(n) * mean, double(n) * se};
}

}  // namespace summax

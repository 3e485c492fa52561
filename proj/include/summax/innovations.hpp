#pragma once

#include <cstdint>
#include <vector>

#include "summax/rng.hpp"
#include "summax/tail_model.hpp"

namespace summax {

// Innovation generators: i.i.d. draws from the tail law, or a strongly
// mixing sequence built as an instantaneous transform of a stationary
// Gaussian AR(1) (probability-integral transform keeps the marginal law
// exact). phi = 0 reproduces the i.i.d. path draw-for-draw.
enum class InnovationKind { iid, gauss_copula_ar1 };

struct InnovationSpec {
  InnovationKind kind = InnovationKind::iid;
  double phi = 0.0;  // AR(1) coefficient, |phi| < 1; only used by the copula kind
  TailModel tail;
};

void validate(const InnovationSpec& spec);

// Window of values Z_i for i in {1-J, ..., n}.
struct InnovationPath {
  std::vector<double> values;
  std::int64_t first_index = 1;

  double at(std::int64_t i) const { return values[std::size_t(i - first_index)]; }
  std::int64_t last_index() const {
    return first_index + std::int64_t(values.size()) - 1;
  }
};

// Underlying stationary Gaussian path on the same window (diagnostics).
InnovationPath sample_underlying_gaussian(const InnovationSpec& spec, std::uint64_t n,
                                          std::uint64_t pre_history, std::uint64_t seed,
                                          std::uint64_t rep = 0);

InnovationPath sample_path(const InnovationSpec& spec, std::uint64_t n,
                           std::uint64_t pre_history, std::uint64_t seed,
                           std::uint64_t rep = 0);

// Monte Carlo estimate of the local-dependence quantity
//   n * sum_{i=1}^{floor(n/k)} P(|Z_0|/a_n > x, |Z_i|/a_n > x),
// whose iterated limit (n, then k) vanishing is the anti-clustering
// condition the innovation models are meant to satisfy.
struct DPrimeEstimate {
  double value;
  double std_error;
};

DPrimeEstimate dprime_statistic(const InnovationSpec& spec, std::uint64_t n,
                                std::uint64_t k, double x, std::uint64_t reps,
                                std::uint64_t seed);

// Standard normal CDF.
double std_normal_cdf(double g);

}  // namespace summax

#include "summax/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "summax/rng.hpp"

namespace summax {

CoefficientSample make_coefficient_sample(std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("coefficients: empty sequence");
  CoefficientSample s;
  s.coeffs = std::move(coeffs);
  for (double c : s.coeffs) {
    s.total += c;
    s.c_plus = std::max(s.c_plus, c);
    s.c_minus = std::max(s.c_minus, -c);
  }
  return s;
}

void validate(const CoefficientModel& model) {
  switch (model.kind) {
    case CoefficientKind::deterministic:
      if (model.values.empty()) {
        throw std::invalid_argument("coefficients.values must be non-empty");
      }
      break;
    case CoefficientKind::random_bridge:
      if (model.order < 1) throw std::invalid_argument("coefficients.order must be >= 1");
      break;
    case CoefficientKind::infinite_geometric:
      if (!(model.rho > 0.0 && model.rho < 1.0)) {
        throw std::invalid_argument("coefficients.rho must lie in (0,1)");
      }
      break;
  }
}

std::uint64_t geometric_truncation(const CoefficientModel& model) {
  if (model.truncation > 0) return model.truncation;
  // Discarded geometric mass rho^{J+1} below 1e-8 of the total.
  return std::uint64_t(std::ceil(std::log(1e-8) / std::log(model.rho)));
}

CoefficientSample sample_coeffs(const CoefficientModel& model, std::uint64_t seed,
                                std::uint64_t rep) {
  validate(model);
  switch (model.kind) {
    case CoefficientKind::deterministic:
      return make_coefficient_sample(model.values);
    case CoefficientKind::random_bridge: {
      RngStream rng = make_stream(seed, StreamPurpose::coefficients, rep);
      const double sign = (rng.next_bits() & 1) ? 1.0 : -1.0;
      const double scale = sign * std::exp(rng.next_normal());  // Rademacher x LogNormal
      const std::uint64_t q = model.order;
      std::vector<double> ratios(q + 1);
      for (std::uint64_t s = 0; s < q; ++s) ratios[s] = rng.next_uniform();
      ratios[q] = 1.0;
      std::vector<double> coeffs(q + 1);
      double prev = 0.0;
      for (std::uint64_t s = 0; s <= q; ++s) {
        coeffs[s] = scale * (ratios[s] - prev);
        prev = ratios[s];
      }
      return make_coefficient_sample(std::move(coeffs));
    }
    case CoefficientKind::infinite_geometric: {
      RngStream rng = make_stream(seed, StreamPurpose::coefficients, rep);
      const double sign = (rng.next_bits() & 1) ? 1.0 : -1.0;
      const double scale = sign * std::exp(rng.next_normal());
      const std::uint64_t J = geometric_truncation(model);
      std::vector<double> coeffs(J + 1);
      double power = 1.0;
      for (std::uint64_t j = 0; j <= J; ++j) {
        coeffs[j] = scale * (1.0 - model.rho) * power;
        power *= model.rho;
      }
      return make_coefficient_sample(std::move(coeffs));
    }
  }
  throw std::logic_error("unreachable");
}

PartialSumCheck check_partial_sum_condition(std::span<const double> coeffs) {
  double total = 0.0;
  for (double c : coeffs) total += c;
  if (total == 0.0) {
    throw std::invalid_argument("partial-sum condition: total coefficient sum is zero");
  }
  constexpr double kSlack = 1e-12;
  bool ok = true;
  double worst = 0.0;
  double worst_excess = -1.0;
  double partial = 0.0;
  for (double c : coeffs) {
    partial += c;
    const double ratio = partial / total;
    const double excess = std::max(ratio - 1.0, -ratio);
    if (excess > kSlack) ok = false;
    if (excess > worst_excess) {
      worst_excess = excess;
      worst = ratio;
    }
  }
  return PartialSumCheck{ok, worst};
}

CoefficientSample finite_order_approx(const CoefficientSample& sample, std::uint64_t q) {
  if (q < 1) throw std::invalid_argument("finite_order_approx: q must be >= 1");
  std::vector<double> coeffs(q + 1, 0.0);
  double tail = 0.0;
  for (std::size_t j = 0; j < sample.coeffs.size(); ++j) {
    if (j < q) {
      coeffs[j] = sample.coeffs[j];
    } else {
      tail += sample.coeffs[j];
    }
  }
  coeffs[q] = tail;
  return make_coefficient_sample(std::move(coeffs));
}

}  // namespace summax

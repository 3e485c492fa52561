#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace summax {

// Realized moving-average coefficients with the derived summaries used by
// the limit objects: total sum, largest positive and negative entries.
struct CoefficientSample {
  std::vector<double> coeffs;
  double total = 0.0;    // C
  double c_plus = 0.0;   // max(C_j v 0)
  double c_minus = 0.0;  // max(-C_j v 0)

  double c_star() const { return c_plus > c_minus ? c_plus : c_minus; }
};

CoefficientSample make_coefficient_sample(std::vector<double> coeffs);

enum class CoefficientKind { deterministic, random_bridge, infinite_geometric };

// random_bridge: C_s = S (R_s - R_{s-1}) with R_0..R_{q-1} iid Uniform(0,1),
// R_q = 1 and a random scale S; every partial-sum ratio is then one of the
// R_s, so the bridge construction satisfies the partial-sum constraint by
// construction while still producing sign-changing coefficients.
// infinite_geometric: C_j = S (1-rho) rho^j truncated at J (auto-chosen so
// the discarded mass is below 1e-8 of the total when truncation = 0).
struct CoefficientModel {
  CoefficientKind kind = CoefficientKind::deterministic;
  std::vector<double> values;   // deterministic
  std::uint64_t order = 2;      // q for random_bridge
  double rho = 0.5;             // geometric ratio
  std::uint64_t truncation = 0; // geometric truncation J; 0 = auto
};

void validate(const CoefficientModel& model);
std::uint64_t geometric_truncation(const CoefficientModel& model);

CoefficientSample sample_coeffs(const CoefficientModel& model, std::uint64_t seed,
                                std::uint64_t rep = 0);

// Are all partial sums of the coefficients between 0 and the total?
struct PartialSumCheck {
  bool ok;
  double worst_ratio;  // the ratio farthest outside [0,1] (or the extreme one)
};

PartialSumCheck check_partial_sum_condition(std::span<const double> coeffs);

// Coefficients of the finite-order approximant: (C_0..C_{q-1}, tail sum),
// which inherit the partial-sum constraint from the full sequence.
CoefficientSample finite_order_approx(const CoefficientSample& sample, std::uint64_t q);

}  // namespace summax

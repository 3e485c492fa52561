#pragma once

#include <cstdint>
#include <utility>

#include "summax/coefficients.hpp"
#include "summax/innovations.hpp"
#include "summax/step_function.hpp"

namespace summax {

// Moving average X_i = sum_j C_j Z_{i-j}, i = 1..n. The innovation window
// must reach back to Z_{1-q} where q+1 is the coefficient count.
struct MAPath {
  std::vector<double> x;  // x[i-1] = X_i
  std::uint64_t n = 0;
};

MAPath build_ma(const CoefficientSample& coeffs, const InnovationPath& innovations,
                std::uint64_t n);

// Partial-sum path V_n(t) = (1/a_n) sum_{i <= floor(nt)} X_i; starts at 0.
StepFunction partial_sum_path(const MAPath& ma, double a_n);

// Partial-max path M_n: running maximum of X_i/a_n, carrying X_1/a_n on
// [0, 1/n) rather than starting at zero.
StepFunction partial_max_path(const MAPath& ma, double a_n);

// Proxy processes that replace the moving average by its dominant single-jump
// contributions: the sum path uses the total coefficient on raw innovations,
// the max path scales |Z_i| by c_plus or c_minus according to the sign of
// Z_i. Same [0, 1/n) convention as partial_max_path for comparability.
StepFunction proxy_sum_path(const InnovationPath& innovations, double total,
                            double a_n, std::uint64_t n);
StepFunction proxy_max_path(const InnovationPath& innovations, double c_plus,
                            double c_minus, double a_n, std::uint64_t n);

// One-sided running maxima of the innovations themselves with the "max of
// nothing is zero" convention: the two monotone coordinates fed by the
// empirical point measure.
std::pair<StepFunction, StepFunction> one_sided_max_paths(
    const InnovationPath& innovations, double a_n, std::uint64_t n);

// Truncated and centered partial sum
//   sum_{i<=floor(nt)} (Z_i/a_n) 1{|Z_i|/a_n > u}  -  floor(nt) * b_n,
// with caller-supplied centering constant b_n per step.
StepFunction truncated_centered_sum(const InnovationPath& innovations, double a_n,
                                    std::uint64_t n, double u, double b_n);

// Indicator events that bound the chance of a large M2 gap between the
// partial-max path and its proxy: a big scaled innovation near the window
// edges, two big ones within lag q of each other, or two big ones in a
// common lag-q lookback plus a separated third. The innovation window must
// cover indices [-q, n+q].
struct BigValueEvents {
  bool edge = false;
  bool adjacent_pair = false;
  bool lagged_pair = false;

  bool any() const { return edge || adjacent_pair || lagged_pair; }
};

BigValueEvents big_value_events(const InnovationPath& innovations, std::uint64_t n,
                                std::uint64_t q, double c_star, double delta,
                                double a_n);

}  // namespace summax

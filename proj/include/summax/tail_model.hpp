#pragma once

#include <cstdint>

namespace summax {

// Exact two-sided Pareto law with tail index alpha in (0,2) and tail balance
// (p, r = 1-p):  P(|Z| > x) = x^-alpha for x >= 1, P(Z > x) = p x^-alpha,
// P(Z < -x) = r x^-alpha. alpha = 1 is admitted only with p = r (the law must
// be symmetric there).
struct TailModel {
  double alpha;
  double p;

  double r() const { return 1.0 - p; }
};

TailModel make_tail_model(double alpha, double p);
void validate(const TailModel& model);

// Inverse CDF; u in (0,1). Negative branch below u = r, positive above.
double quantile(const TailModel& model, double u);

// P(|Z| > x) and the CDF P(Z <= x).
double tail_probability(const TailModel& model, double x);
double cdf(const TailModel& model, double x);

// Normalizing sequence a_n = n^{1/alpha}: n P(|Z| > a_n) = 1 exactly.
double a_n(const TailModel& model, std::uint64_t n);

// integral of x mu(dx) over u < |x| <= 1, mu the limit measure of the law.
// Closed form (p-r) * alpha/(1-alpha) * (1 - u^{1-alpha}) for alpha != 1.
double mu_integral(const TailModel& model, double u);

// Drift constant of the limiting stable process: 0 at alpha = 1, else
// (p-r) * alpha/(1-alpha).
double drift_b(const TailModel& model);

// E[(Z/a_n) 1{u < |Z|/a_n <= 1}] in closed form; n * value converges to
// mu_integral(u) and is exactly equal to it once u * a_n >= 1.
double centering_b_n(const TailModel& model, std::uint64_t n, double u);

// E[(Z/a_n) 1{|Z|/a_n <= u}], the mean removed by a small-jump truncation.
double small_jump_mean(const TailModel& model, std::uint64_t n, double u);

// E(|Z| 1{|Z| <= y}) / (y P(|Z| > y)) for alpha in (0,1); tends to
// alpha/(1-alpha) as y grows.
double karamata_ratio(const TailModel& model, double y);

}  // namespace summax

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace summax {

// Kolmogorov limiting distribution Q(lambda) = P(sup > lambda).
double kolmogorov_q(double lambda);

struct KsResult {
  double distance;
  double p_value;
};

// One-sample test against a continuous CDF (asymptotic p-value with the
// Stephens small-sample correction).
KsResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf);

// Two-sample test, asymptotic p-value.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// Rough sampling error of a KS distance (binomial at the sup point); used
// for trend assertions with slack.
double ks_distance_se(double distance, std::size_t n, std::size_t m);

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // population variance
double median(std::vector<double> xs);
// Order-statistic standard error of the median (half the central +-sqrt(N)
// order-statistic spread).
double median_se(std::vector<double> xs);

// Least-squares slope of y on x.
double regression_slope(std::span<const double> x, std::span<const double> y);

// Pearson chi-square statistic of observed counts against Poisson(mean);
// bins with expected count below 5 are pooled. Returns (statistic, dof).
struct ChiSquare {
  double statistic;
  std::size_t dof;
};
ChiSquare poisson_chi_square(std::span<const std::uint64_t> counts, double mean);

}  // namespace summax

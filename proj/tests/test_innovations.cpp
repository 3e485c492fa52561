#include <doctest.h>

#include <cmath>

#include "summax/innovations.hpp"
#include "summax/stats.hpp"

using namespace summax;

namespace {

InnovationSpec iid_spec(double alpha, double p) {
  InnovationSpec spec;
  spec.kind = InnovationKind::iid;
  spec.tail = make_tail_model(alpha, p);
  return spec;
}

InnovationSpec copula_spec(double alpha, double p, double phi) {
  InnovationSpec spec;
  spec.kind = InnovationKind::gauss_copula_ar1;
  spec.phi = phi;
  spec.tail = make_tail_model(alpha, p);
  return spec;
}

}  // namespace

TEST_CASE("paths are reproducible and windowed as requested") {
  const InnovationSpec spec = iid_spec(0.8, 0.7);
  const InnovationPath a = sample_path(spec, 100, 5, 42, 3);
  const InnovationPath b = sample_path(spec, 100, 5, 42, 3);
  CHECK(a.values == b.values);
  CHECK(a.first_index == -4);
  CHECK(a.last_index() == 100);
  const InnovationPath c = sample_path(spec, 100, 5, 42, 4);
  CHECK(a.values != c.values);
}

TEST_CASE("phi = 0 copula reduces exactly to the iid path") {
  const InnovationPath iid = sample_path(iid_spec(0.9, 0.6), 500, 2, 7, 1);
  const InnovationPath cop = sample_path(copula_spec(0.9, 0.6, 0.0), 500, 2, 7, 1);
  CHECK(iid.values == cop.values);
}

TEST_CASE("underlying gaussian has lag-1 correlation phi") {
  const double phi = 0.5;
  const InnovationPath g =
      sample_underlying_gaussian(copula_spec(0.8, 0.5, phi), 1000000, 0, 11, 0);
  double acc = 0.0, m = 0.0, v = 0.0;
  const std::size_t n = g.values.size();
  for (double x : g.values) m += x;
  m /= double(n);
  for (double x : g.values) v += (x - m) * (x - m);
  v /= double(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    acc += (g.values[i] - m) * (g.values[i + 1] - m);
  }
  const double corr = acc / double(n - 1) / v;
  CHECK(std::abs(corr - phi) < 0.01);
}

TEST_CASE("copula marginal law passes KS against the tail model") {
  const InnovationSpec spec = copula_spec(0.8, 0.7, 0.5);
  const InnovationPath z = sample_path(spec, 1000000, 0, 12, 0);
  const KsResult ks =
      ks_one_sample(z.values, [&](double x) { return cdf(spec.tail, x); });
  CHECK(ks.p_value > 0.01);
}

TEST_CASE("copula marginals are stationary across positions") {
  const InnovationSpec spec = copula_spec(0.9, 0.5, 0.7);
  const std::size_t reps = 20000;
  double m_first = 0.0, m_mid = 0.0;
  for (std::size_t r = 0; r < reps; ++r) {
    const InnovationPath g = sample_underlying_gaussian(spec, 20, 0, 13, r);
    m_first += std_normal_cdf(g.values.front());
    m_mid += std_normal_cdf(g.values[10]);
  }
  m_first /= double(reps);
  m_mid /= double(reps);
  // uniform marginals: mean 1/2, sd of the estimate ~ 0.002
  CHECK(std::abs(m_first - 0.5) < 0.01);
  CHECK(std::abs(m_mid - 0.5) < 0.01);
}

TEST_CASE("dprime statistic matches its closed form for iid innovations") {
  // n * floor(n/k) * (x^-alpha / n)^2 = floor(n/k) x^-2alpha / n
  const InnovationSpec spec = iid_spec(1.0, 0.5);
  const std::uint64_t n = 10000, k = 10;
  const double x = 1.0;
  const double exact = double(n / k) * std::pow(x, -2.0) / double(n);
  CHECK(exact == doctest::Approx(0.1));
  const DPrimeEstimate est = dprime_statistic(spec, n, k, x, 40000, 14);
  CHECK(std::abs(est.value - exact) <= 3.0 * est.std_error + 1e-12);
}

TEST_CASE("dprime statistic vanishes for huge thresholds") {
  const DPrimeEstimate est = dprime_statistic(iid_spec(0.8, 0.7), 1000, 10, 1e9, 200, 15);
  CHECK(est.value == 0.0);
}

TEST_CASE("dprime trend for the copula: decreasing in n at fixed k") {
  const InnovationSpec spec = copula_spec(1.0, 0.5, 0.5);
  const std::uint64_t k = 10;
  const double x = 0.05;
  double prev = 1e300, prev_se = 0.0;
  for (std::uint64_t n : {std::uint64_t(1000), std::uint64_t(10000),
                          std::uint64_t(100000)}) {
    const DPrimeEstimate est = dprime_statistic(spec, n, k, x, 3000, 16);
    CHECK(est.value <= prev + 2.0 * std::hypot(est.std_error, prev_se));
    prev = est.value;
    prev_se = est.std_error;
  }
}

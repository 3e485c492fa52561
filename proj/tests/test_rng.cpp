#include <doctest.h>

#include <cmath>
#include <vector>

#include "summax/rng.hpp"
#include "summax/stats.hpp"

using namespace summax;

TEST_CASE("philox output is deterministic and stream-separated") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  bool all_equal = true, differs_stream = false, differs_seed = false;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t va = a.next_bits();
    all_equal = all_equal && (va == b.next_bits());
    differs_stream = differs_stream || (va != c.next_bits());
    differs_seed = differs_seed || (va != d.next_bits());
  }
  CHECK(all_equal);
  CHECK(differs_stream);
  CHECK(differs_seed);
}

TEST_CASE("uniforms pass KS against U(0,1) and stay inside the open interval") {
  RngStream rng(20240817, 1);
  std::vector<double> u(100000);
  for (double& x : u) {
    x = rng.next_uniform();
    REQUIRE(x > 0.0);
    REQUIRE(x < 1.0);
  }
  const KsResult ks = ks_one_sample(u, [](double x) { return x; });
  CHECK(ks.p_value > 0.001);
}

TEST_CASE("normals have the right first two moments and pass KS") {
  RngStream rng(20240817, 2);
  std::vector<double> g(200000);
  for (double& x : g) x = rng.next_normal();
  CHECK(std::abs(mean(g)) < 0.01);
  CHECK(std::abs(variance(g) - 1.0) < 0.02);
  const KsResult ks =
      ks_one_sample(g, [](double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); });
  CHECK(ks.p_value > 0.001);
}

TEST_CASE("lag correlations of the uniform stream are negligible") {
  RngStream rng(7, 3);
  const std::size_t n = 100000;
  std::vector<double> u(n);
  for (double& x : u) x = rng.next_uniform();
  for (std::size_t lag : {1u, 2u, 7u}) {
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) {
      acc += (u[i] - 0.5) * (u[i + lag] - 0.5);
    }
    const double corr = acc / double(n - lag) * 12.0;  // Var U = 1/12
    CHECK(std::abs(corr) < 0.02);
  }
}

TEST_CASE("make_stream separates purposes and replications") {
  RngStream a = make_stream(1, StreamPurpose::innovations, 0);
  RngStream b = make_stream(1, StreamPurpose::coefficients, 0);
  RngStream c = make_stream(1, StreamPurpose::innovations, 1);
  const std::uint64_t va = a.next_bits();
  CHECK(va != b.next_bits());
  CHECK(va != c.next_bits());
}

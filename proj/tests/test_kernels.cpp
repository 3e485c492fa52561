#include <doctest.h>

#include <vector>

#include "summax/kernels/dispatch.hpp"
#include "summax/rng.hpp"

using namespace summax;

namespace {

std::vector<double> random_vector(RngStream& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = 10.0 * rng.next_uniform() - 5.0;
  return v;
}

}  // namespace

TEST_CASE("convolve matches a hand-rolled loop") {
  RngStream rng(5, 0);
  const std::size_t q = 4, n = 37;
  const std::vector<double> z = random_vector(rng, n + q);
  const std::vector<double> c = random_vector(rng, q + 1);
  std::vector<double> out(n);
  kernels::scalar_table().convolve(z.data() + q, n, c.data(), c.size(), out.data());
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= q; ++j) acc += c[j] * z[q + i - j];
    CHECK(out[i] == acc);
  }
}

TEST_CASE("windowed extrema match brute force") {
  RngStream rng(6, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 5 + rng.next_bits() % 200;
    const std::size_t w = 1 + rng.next_bits() % m;
    const std::vector<double> v = random_vector(rng, m);
    std::vector<double> lo(m), hi(m);
    kernels::scalar_table().windowed_max(v.data(), m, w, hi.data());
    kernels::scalar_table().windowed_min(v.data(), m, w, lo.data());
    for (std::size_t i = 0; i + w <= m; ++i) {
      double bmax = v[i], bmin = v[i];
      for (std::size_t j = i; j < i + w; ++j) {
        bmax = std::max(bmax, v[j]);
        bmin = std::min(bmin, v[j]);
      }
      CHECK(hi[i] == bmax);
      CHECK(lo[i] == bmin);
    }
  }
}

TEST_CASE("avx2 variants are bit-identical to the scalar reference") {
  const kernels::KernelTable* avx2 = kernels::avx2_table();
  if (avx2 == nullptr || !kernels::cpu_has_avx2()) {
    MESSAGE("AVX2 unavailable; skipping equivalence checks");
    return;
  }
  RngStream rng(7, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.next_bits() % 300;
    const std::size_t q = rng.next_bits() % 9;
    const std::vector<double> z = random_vector(rng, n + q);
    const std::vector<double> c = random_vector(rng, q + 1);
    std::vector<double> a(n), b(n);
    kernels::scalar_table().convolve(z.data() + q, n, c.data(), c.size(), a.data());
    avx2->convolve(z.data() + q, n, c.data(), c.size(), b.data());
    CHECK(a == b);

    const std::size_t m = 4 + rng.next_bits() % 400;
    const std::size_t w = 1 + rng.next_bits() % m;
    const std::vector<double> v = random_vector(rng, m);
    std::vector<double> s1(m), s2(m);
    kernels::scalar_table().windowed_max(v.data(), m, w, s1.data());
    avx2->windowed_max(v.data(), m, w, s2.data());
    CHECK(std::equal(s1.begin(), s1.begin() + (m - w + 1), s2.begin()));
    kernels::scalar_table().windowed_min(v.data(), m, w, s1.data());
    avx2->windowed_min(v.data(), m, w, s2.data());
    CHECK(std::equal(s1.begin(), s1.begin() + (m - w + 1), s2.begin()));

    const std::size_t count = 1 + rng.next_bits() % 200;
    const std::vector<double> vlo = random_vector(rng, count);
    const std::vector<double> vhi = random_vector(rng, count);
    const std::vector<double> wmax = random_vector(rng, count);
    const std::vector<double> wmin = random_vector(rng, count);
    std::vector<double> p1(count), p2(count);
    kernels::scalar_table().spike_values(vlo.data(), vhi.data(), wmax.data(),
                                         wmin.data(), count, p1.data());
    avx2->spike_values(vlo.data(), vhi.data(), wmax.data(), wmin.data(), count,
                       p2.data());
    CHECK(p1 == p2);
  }
}

TEST_CASE("dispatch resolves to a valid table") {
  const kernels::KernelTable& table = kernels::active();
  CHECK(table.convolve != nullptr);
  CHECK(table.windowed_max != nullptr);
  CHECK(table.windowed_min != nullptr);
  CHECK(table.spike_values != nullptr);
}

// AVX2 kernel variants. Compiled with -mavx2 in its own translation unit and
// only reached through the runtime dispatch in dispatch.cpp.
//
// Bit-exactness contract: lanes carry independent outputs and every lane
// performs the same operation sequence as the scalar reference, so results
// are identical to scalar_table() outputs (mul+add, not FMA, in convolve).

#include <immintrin.h>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "summax/kernels/dispatch.hpp"

namespace summax::kernels {

namespace {

void convolve_avx2(const double* z, std::size_t n, const double* coeffs,
                   std::size_t ncoeff, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < ncoeff; ++j) {
      const __m256d c = _mm256_set1_pd(coeffs[j]);
      const __m256d zv = _mm256_loadu_pd(z + std::ptrdiff_t(i) - std::ptrdiff_t(j));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(c, zv));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < ncoeff; ++j) {
      acc += coeffs[j] * z[std::ptrdiff_t(i) - std::ptrdiff_t(j)];
    }
    out[i] = acc;
  }
}

template <bool kMax>
inline __m256d ext_pd(__m256d a, __m256d b) {
  return kMax ? _mm256_max_pd(a, b) : _mm256_min_pd(a, b);
}

template <bool kMax>
void windowed_extremum_avx2(const double* v, std::size_t m, std::size_t w, double* out,
                            double* pre, double* suf) {
  auto ext = [](double a, double b) { return kMax ? std::max(a, b) : std::min(a, b); };
  for (std::size_t i = 0; i < m; ++i) {
    pre[i] = (i % w == 0) ? v[i] : ext(pre[i - 1], v[i]);
  }
  for (std::size_t ii = m; ii-- > 0;) {
    suf[ii] = (ii % w == w - 1 || ii == m - 1) ? v[ii] : ext(suf[ii + 1], v[ii]);
  }
  const std::size_t count = m - w + 1;
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d s = _mm256_loadu_pd(suf + i);
    const __m256d p = _mm256_loadu_pd(pre + i + w - 1);
    _mm256_storeu_pd(out + i, ext_pd<kMax>(s, p));
  }
  for (; i < count; ++i) out[i] = ext(suf[i], pre[i + w - 1]);
}

thread_local std::vector<double> tl_prefix;
thread_local std::vector<double> tl_suffix;

void windowed_max_avx2(const double* v, std::size_t m, std::size_t w, double* out) {
  tl_prefix.resize(m);
  tl_suffix.resize(m);
  windowed_extremum_avx2<true>(v, m, w, out, tl_prefix.data(), tl_suffix.data());
}

void windowed_min_avx2(const double* v, std::size_t m, std::size_t w, double* out) {
  tl_prefix.resize(m);
  tl_suffix.resize(m);
  windowed_extremum_avx2<false>(v, m, w, out, tl_prefix.data(), tl_suffix.data());
}

void spike_values_avx2(const double* vlo, const double* vhi, const double* wmax,
                       const double* wmin, std::size_t count, double* pv) {
  std::size_t a = 0;
  for (; a + 4 <= count; a += 4) {
    const __m256d lo = _mm256_loadu_pd(vlo + a);
    const __m256d hi = _mm256_loadu_pd(vhi + a);
    const __m256d vmax = _mm256_max_pd(lo, hi);
    const __m256d vmin = _mm256_min_pd(lo, hi);
    const __m256d up = _mm256_sub_pd(_mm256_loadu_pd(wmax + a), vmax);
    const __m256d down = _mm256_sub_pd(vmin, _mm256_loadu_pd(wmin + a));
    _mm256_storeu_pd(pv + a, _mm256_max_pd(up, down));
  }
  for (; a < count; ++a) {
    const double up = wmax[a] - std::max(vlo[a], vhi[a]);
    const double down = std::min(vlo[a], vhi[a]) - wmin[a];
    pv[a] = std::max(up, down);
  }
}

}  // namespace

const KernelTable* avx2_table_impl() {
  static const KernelTable table = {convolve_avx2, windowed_max_avx2, windowed_min_avx2,
                                    spike_values_avx2, "avx2"};
  return &table;
}

}  // namespace summax::kernels

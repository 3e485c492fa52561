#pragma once

#include <cstddef>

namespace summax::kernels {

// Inner-loop kernels with scalar reference implementations and AVX2 variants
// selected at runtime. Variants are bit-identical to the scalar reference:
// vectorization is across independent outputs, never across an accumulation
// order.
struct KernelTable {
  // out[i] = sum_{j<ncoeff} coeffs[j] * z[i-j], i = 0..n-1.
  // z must be valid on [-(ncoeff-1), n-1].
  void (*convolve)(const double* z, std::size_t n, const double* coeffs,
                   std::size_t ncoeff, double* out);
  // out[i] = max/min of v[i..i+w-1], i = 0..m-w (van Herk sliding extrema).
  void (*windowed_max)(const double* v, std::size_t m, std::size_t w, double* out);
  void (*windowed_min)(const double* v, std::size_t m, std::size_t w, double* out);
  // pv[a] = max(wmax[a] - max(vlo[a], vhi[a]), min(vlo[a], vhi[a]) - wmin[a]).
  void (*spike_values)(const double* vlo, const double* vhi, const double* wmax,
                       const double* wmin, std::size_t count, double* pv);
  const char* name;
};

const KernelTable& scalar_table();
// Compiled-in AVX2 table, or nullptr when the build lacks it.
const KernelTable* avx2_table();
bool cpu_has_avx2();

// Resolved once per process: AVX2 when compiled in and supported, unless
// SUMMAX_SIMD=scalar is set in the environment.
const KernelTable& active();

}  // namespace summax::kernels

#include <algorithm>
#include <cstddef>
#include <vector>

#include "summax/kernels/dispatch.hpp"

namespace summax::kernels {

namespace {

void convolve_scalar(const double* z, std::size_t n, const double* coeffs,
                     std::size_t ncoeff, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < ncoeff; ++j) {
      acc += coeffs[j] * z[std::ptrdiff_t(i) - std::ptrdiff_t(j)];
    }
    out[i] = acc;
  }
}

// van Herk / Gil-Werman: block prefix and suffix scans, then an elementwise
// combine. The combine is the data-parallel part shared with the AVX2 path.
template <bool kMax>
void windowed_extremum(const double* v, std::size_t m, std::size_t w, double* out,
                       double* scratch_prefix, double* scratch_suffix) {
  auto ext = [](double a, double b) { return kMax ? std::max(a, b) : std::min(a, b); };
  double* pre = scratch_prefix;
  double* suf = scratch_suffix;
  for (std::size_t i = 0; i < m; ++i) {
    pre[i] = (i % w == 0) ? v[i] : ext(pre[i - 1], v[i]);
  }
  for (std::size_t ii = m; ii-- > 0;) {
    suf[ii] = (ii % w == w - 1 || ii == m - 1) ? v[ii] : ext(suf[ii + 1], v[ii]);
  }
  const std::size_t count = m - w + 1;
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = ext(suf[i], pre[i + w - 1]);
  }
}

thread_local std::vector<double> tl_prefix;
thread_local std::vector<double> tl_suffix;

void windowed_max_scalar(const double* v, std::size_t m, std::size_t w, double* out) {
  tl_prefix.resize(m);
  tl_suffix.resize(m);
  windowed_extremum<true>(v, m, w, out, tl_prefix.data(), tl_suffix.data());
}

void windowed_min_scalar(const double* v, std::size_t m, std::size_t w, double* out) {
  tl_prefix.resize(m);
  tl_suffix.resize(m);
  windowed_extremum<false>(v, m, w, out, tl_prefix.data(), tl_suffix.data());
}

void spike_values_scalar(const double* vlo, const double* vhi, const double* wmax,
                         const double* wmin, std::size_t count, double* pv) {
  for (std::size_t a = 0; a < count; ++a) {
    const double up = wmax[a] - std::max(vlo[a], vhi[a]);
    const double down = std::min(vlo[a], vhi[a]) - wmin[a];
    pv[a] = std::max(up, down);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table = {convolve_scalar, windowed_max_scalar,
                                    windowed_min_scalar, spike_values_scalar, "scalar"};
  return table;
}

}  // namespace summax::kernels

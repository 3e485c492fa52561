#include "summax/linear_process.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "summax/kernels/dispatch.hpp"

namespace summax {

MAPath build_ma(const CoefficientSample& coeffs, const InnovationPath& innovations,
                std::uint64_t n) {
  const std::int64_t q = std::int64_t(coeffs.coeffs.size()) - 1;
  if (innovations.first_index > 1 - q || innovations.last_index() < std::int64_t(n)) {
    throw std::invalid_argument("build_ma: innovation window lacks pre-history");
  }
  MAPath ma;
  ma.n = n;
  ma.x.resize(n);
  const double* z1 = innovations.values.data() + (1 - innovations.first_index);
  kernels::active().convolve(z1, n, coeffs.coeffs.data(), coeffs.coeffs.size(),
                             ma.x.data());
  return ma;
}

StepFunction partial_sum_path(const MAPath& ma, double a_n) {
  std::vector<double> values(ma.n);
  double acc = 0.0;
  for (std::uint64_t i = 0; i < ma.n; ++i) {
    acc += ma.x[i];
    values[i] = acc / a_n;
  }
  return StepFunction::from_grid(0.0, values, ma.n);
}

StepFunction partial_max_path(const MAPath& ma, double a_n) {
  std::vector<double> values(ma.n);
  double running = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < ma.n; ++i) {
    running = std::max(running, ma.x[i] / a_n);
    values[i] = running;
  }
  return StepFunction::from_grid(values[0], values, ma.n);
}

StepFunction proxy_sum_path(const InnovationPath& innovations, double total,
                            double a_n, std::uint64_t n) {
  std::vector<double> values(n);
  double acc = 0.0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    acc += total * innovations.at(std::int64_t(i));
    values[i - 1] = acc / a_n;
  }
  return StepFunction::from_grid(0.0, values, n);
}

StepFunction proxy_max_path(const InnovationPath& innovations, double c_plus,
                            double c_minus, double a_n, std::uint64_t n) {
  std::vector<double> values(n);
  double running = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double z = innovations.at(std::int64_t(i));
    const double m = z > 0.0 ? c_plus * (z / a_n) : c_minus * (-z / a_n);
    running = std::max(running, m);
    values[i - 1] = running;
  }
  return StepFunction::from_grid(values[0], values, n);
}

std::pair<StepFunction, StepFunction> one_sided_max_paths(
    const InnovationPath& innovations, double a_n, std::uint64_t n) {
  std::vector<double> pos(n), neg(n);
  double pmax = 0.0, nmax = 0.0;  // max over the empty set is zero
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double x = innovations.at(std::int64_t(i)) / a_n;
    if (x > 0.0) {
      pmax = std::max(pmax, x);
    } else if (x < 0.0) {
      nmax = std::max(nmax, -x);
    }
    pos[i - 1] = pmax;
    neg[i - 1] = nmax;
  }
  return {StepFunction::from_grid(0.0, pos, n), StepFunction::from_grid(0.0, neg, n)};
}

StepFunction truncated_centered_sum(const InnovationPath& innovations, double a_n,
                                    std::uint64_t n, double u, double b_n) {
  if (!(u > 0.0 && u <= 1.0)) {
    throw std::domain_error("truncated_centered_sum: u outside (0,1]");
  }
  std::vector<double> values(n);
  double acc = 0.0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double x = innovations.at(std::int64_t(i)) / a_n;
    if (std::abs(x) > u) acc += x;
    values[i - 1] = acc - double(i) * b_n;
  }
  return StepFunction::from_grid(0.0, values, n);
}

BigValueEvents big_value_events(const InnovationPath& innovations, std::uint64_t n,
                                std::uint64_t q, double c_star, double delta,
                                double a_n) {
  const std::int64_t qi = std::int64_t(q);
  const std::int64_t ni = std::int64_t(n);
  if (innovations.first_index > -qi || innovations.last_index() < ni + qi) {
    throw std::invalid_argument("big_value_events: window must cover [-q, n+q]");
  }
  BigValueEvents ev;
  if (c_star <= 0.0) return ev;
  const double threshold = delta * a_n / (4.0 * double(q + 1) * c_star);

  std::vector<std::int64_t> hits;
  for (std::int64_t i = -qi; i <= ni + qi; ++i) {
    if (std::abs(innovations.at(i)) > threshold) hits.push_back(i);
  }
  if (hits.empty()) return ev;

  for (std::int64_t h : hits) {
    if ((h >= -qi && h <= qi) || (h >= ni - qi + 1 && h <= ni)) {
      ev.edge = true;
      break;
    }
  }

  std::int64_t emin_n = ni + 1, emax_n = 0;  // exceedances inside [1, n]
  for (std::int64_t h : hits) {
    if (h >= 1 && h <= ni) {
      emin_n = std::min(emin_n, h);
      emax_n = std::max(emax_n, h);
    }
  }
  const bool have_inner = emax_n >= 1;

  for (std::size_t idx = 0; idx + 1 < hits.size(); ++idx) {
    const std::int64_t i1 = hits[idx], i2 = hits[idx + 1];
    if (i2 - i1 > qi) continue;
    if ((i1 >= 1 && i1 <= ni) || (i2 >= 1 && i2 <= ni)) ev.adjacent_pair = true;
    if (have_inner) {
      const std::int64_t jmin = std::max(i2, std::int64_t(1));
      const std::int64_t jmax = std::min(i1 + qi, ni);
      if (jmin <= jmax && (emax_n > jmin || emin_n < jmax - qi)) {
        ev.lagged_pair = true;
      }
    }
    if (ev.adjacent_pair && ev.lagged_pair) break;
  }
  return ev;
}

}  // namespace summax

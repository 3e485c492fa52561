#pragma once

#include <cstddef>
#include <vector>

#include "summax/step_function.hpp"

namespace summax {

// Oscillation of a step function within rho-windows:
//   omega(f, rho) = sup ||f(t2) - [f(t1), f(t3)]|| over t1 < t2 < t3
// confined to windows [t-rho, t+rho] of [0,1]. For step functions the sup
// runs over plateau-value triples (a < b < c) that fit a window, which the
// time constraint reduces to (jump time of c) - (jump time after a) < 2*rho.
// Exact; zero for monotone functions.
double oscillation(const StepFunction& f, double rho);

// omega(f, .) as an exact step function of rho. omega equals `values[i]` on
// (breaks[i], breaks[i+1]], zero at or below breaks[0], and values.back()
// beyond breaks.back().
struct OscillationProfile {
  std::vector<double> breaks;
  std::vector<double> values;

  double eval(double rho) const;
  // Profile on the log axis: omega(e^z) for z < 0, omega(1) for z >= 0.
  double eval_log(double z) const;
  double max_value() const { return values.empty() ? 0.0 : values.back(); }
  bool empty() const { return values.empty(); }
};

// grid_n > 0 declares that all jump times sit on the grid {i/grid_n}; the
// profile then buckets window gaps by integer index (exact and O(k^2) with
// vectorized inner loops). With grid_n = 0 the grid is auto-detected, and a
// Pareto-frontier fallback handles arbitrary jump times.
OscillationProfile oscillation_profile(const StepFunction& f, std::size_t grid_n = 0);

// Levy distance between two oscillation profiles on the log-rho axis,
// accurate to +/- tol. Exact evaluation on profile breakpoints, bisection
// on the Levy eps.
double levy_distance(const OscillationProfile& a, const OscillationProfile& b, double tol);

// d_M1* = d_M2 + Levy distance between oscillation profiles: a complete
// metric for the M1 topology built from computable pieces.
double d_m1_star(const StepFunction& f, const StepFunction& g, double tol,
                 std::size_t grid_n = 0);

}  // namespace summax

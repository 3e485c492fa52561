#pragma once

// Independent brute-force oracles for the metric computations. These stay
// deliberately naive: dense sampling backed by the 1-Lipschitz property for
// the Hausdorff distance, direct triple enumeration for the oscillation, and
// adaptive Simpson quadrature for the tail-model integrals.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "summax/completed_graph.hpp"
#include "summax/step_function.hpp"

namespace oracles {

// One-sided sup of point-to-graph distances, sampling each segment at the
// given spacing; error at most `spacing` in the result.
inline double reference_one_sided(const summax::CompletedGraph& from,
                                  const summax::CompletedGraph& to, double spacing) {
  double worst = 0.0;
  for (const auto& seg : from.segments) {
    const double len = std::max(std::abs(seg.t1 - seg.t0), std::abs(seg.y1 - seg.y0));
    const int steps = std::max(1, int(std::ceil(len / spacing)));
    for (int s = 0; s <= steps; ++s) {
      const double frac = double(s) / double(steps);
      const double t = seg.t0 + frac * (seg.t1 - seg.t0);
      const double y = seg.y0 + frac * (seg.y1 - seg.y0);
      worst = std::max(worst, summax::distance_to_graph(t, y, to));
    }
  }
  return worst;
}

inline double reference_m2(const summax::StepFunction& f, const summax::StepFunction& g,
                           double spacing) {
  const summax::CompletedGraph gf = summax::completed_graph(f);
  const summax::CompletedGraph gg = summax::completed_graph(g);
  return std::max(reference_one_sided(gf, gg, spacing),
                  reference_one_sided(gg, gf, spacing));
}

// Oscillation straight from the definition: candidate evaluation times near
// every jump, triples constrained to t3 - t1 <= 2*rho.
inline double reference_oscillation(const summax::StepFunction& f, double rho) {
  std::vector<double> times{0.0, 1.0};
  for (const auto& j : f.jumps()) {
    times.push_back(j.time);
    if (j.time > 1e-9) times.push_back(j.time - 1e-9);
    times.push_back(std::min(1.0, j.time + 1e-9));
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  const std::size_t n = times.size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (times[k] - times[i] > 2.0 * rho) break;
        const double lo = std::min(f.eval(times[i]), f.eval(times[k]));
        const double hi = std::max(f.eval(times[i]), f.eval(times[k]));
        const double mid = f.eval(times[j]);
        best = std::max(best, std::max(lo - mid, mid - hi));
      }
    }
  }
  return best;
}

// Adaptive Simpson quadrature.
inline double simpson(const std::function<double(double)>& fn, double a, double b) {
  const double c = 0.5 * (a + b);
  return (b - a) / 6.0 * (fn(a) + 4.0 * fn(c) + fn(b));
}

inline double integrate_rec(const std::function<double(double)>& fn, double a, double b,
                            double whole, double tol, int depth) {
  const double c = 0.5 * (a + b);
  const double left = simpson(fn, a, c);
  const double right = simpson(fn, c, b);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return integrate_rec(fn, a, c, left, 0.5 * tol, depth - 1) +
         integrate_rec(fn, c, b, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& fn, double a, double b,
                        double tol = 1e-12) {
  return integrate_rec(fn, a, b, simpson(fn, a, b), tol, 40);
}

}  // namespace oracles

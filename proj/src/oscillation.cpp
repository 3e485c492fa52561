#include "summax/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "summax/kernels/dispatch.hpp"
#include "summax/metrics.hpp"

namespace summax {

namespace {

// Spike value of the plateau triple family (a, *, c): the most a middle
// plateau sticks out above or below both endpoint values.
inline double triple_spike(double va, double vc, double interior_max, double interior_min) {
  const double up = interior_max - std::max(va, vc);
  const double down = std::min(va, vc) - interior_min;
  return std::max(up, down);
}

}  // namespace

double oscillation(const StepFunction& f, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("oscillation: rho must be positive");
  const std::size_t plateaus = f.plateau_count();
  if (plateaus < 3) return 0.0;
  const auto& jumps = f.jumps();

  double best = 0.0;
  std::size_t amin = 0;
  for (std::size_t c = 2; c < plateaus; ++c) {
    // Feasible openers: jump time after plateau a must exceed tau_c - 2*rho.
    const double cutoff = jumps[c - 1].time - 2.0 * rho;
    while (amin < c - 1 && !(jumps[amin].time > cutoff)) ++amin;
    if (amin > c - 2) continue;
    const double vc = f.plateau_value(c);
    double run_max = -std::numeric_limits<double>::infinity();
    double run_min = std::numeric_limits<double>::infinity();
    for (std::size_t a = c - 2;; --a) {
      const double vb = f.plateau_value(a + 1);
      run_max = std::max(run_max, vb);
      run_min = std::min(run_min, vb);
      best = std::max(best, triple_spike(f.plateau_value(a), vc, run_max, run_min));
      if (a == amin) break;
    }
  }
  return std::max(best, 0.0);
}

double OscillationProfile::eval(double rho) const {
  if (breaks.empty()) return 0.0;
  // omega uses the strict window condition gap < 2*rho, so the value at a
  // breakpoint is the one from the left.
  const auto it = std::lower_bound(breaks.begin(), breaks.end(), rho);
  const std::size_t idx = std::size_t(it - breaks.begin());
  return idx == 0 ? 0.0 : values[idx - 1];
}

double OscillationProfile::eval_log(double z) const {
  if (z >= 0.0) return eval(1.0);
  return eval(std::exp(z));
}

namespace {

std::size_t detect_grid(const StepFunction& f) {
  const auto& jumps = f.jumps();
  if (jumps.size() < 2) return 0;
  double min_gap = 1.0;
  for (std::size_t i = 1; i < jumps.size(); ++i) {
    min_gap = std::min(min_gap, jumps[i].time - jumps[i - 1].time);
  }
  const double n_guess = 1.0 / min_gap;
  if (!(n_guess < 1e8)) return 0;
  const std::size_t n = std::size_t(std::llround(n_guess));
  for (const auto& j : jumps) {
    const auto idx = std::llround(j.time * double(n));
    if (idx < 1 || std::size_t(idx) > n) return 0;
    if (double(idx) / double(n) != j.time) return 0;
  }
  return n;
}

OscillationProfile finalize_profile(std::vector<std::pair<double, double>> frontier) {
  // frontier: (rho breakpoint, value) with both strictly increasing.
  OscillationProfile prof;
  prof.breaks.reserve(frontier.size());
  prof.values.reserve(frontier.size());
  for (const auto& [rho, val] : frontier) {
    prof.breaks.push_back(rho);
    prof.values.push_back(val);
  }
  return prof;
}

OscillationProfile profile_on_grid(const StepFunction& f, std::size_t grid_n) {
  const auto& jumps = f.jumps();
  const std::size_t plateaus = f.plateau_count();
  std::vector<double> v(plateaus);
  for (std::size_t i = 0; i < plateaus; ++i) v[i] = f.plateau_value(i);
  std::vector<std::size_t> idx(jumps.size());
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    idx[i] = std::size_t(std::llround(jumps[i].time * double(grid_n)));
  }

  std::vector<double> best(grid_n, 0.0);  // best spike per integer gap
  std::vector<double> wmax(plateaus), wmin(plateaus), pv(plateaus);
  const auto& k = kernels::active();
  for (std::size_t s = 2; s < plateaus; ++s) {
    const std::size_t w = s - 1;
    k.windowed_max(v.data(), plateaus, w, wmax.data());
    k.windowed_min(v.data(), plateaus, w, wmin.data());
    const std::size_t count = plateaus - s;
    k.spike_values(v.data(), v.data() + s, wmax.data() + 1, wmin.data() + 1, count,
                   pv.data());
    for (std::size_t a = 0; a < count; ++a) {
      if (pv[a] > 0.0) {
        const std::size_t gap = idx[a + s - 1] - idx[a];
        if (pv[a] > best[gap]) best[gap] = pv[a];
      }
    }
  }

  std::vector<std::pair<double, double>> frontier;
  double running = 0.0;
  for (std::size_t gap = 1; gap < grid_n; ++gap) {
    if (best[gap] > running) {
      running = best[gap];
      frontier.emplace_back(double(gap) / (2.0 * double(grid_n)), running);
    }
  }
  return finalize_profile(std::move(frontier));
}

OscillationProfile profile_general(const StepFunction& f) {
  const auto& jumps = f.jumps();
  const std::size_t plateaus = f.plateau_count();
  std::vector<double> v(plateaus);
  for (std::size_t i = 0; i < plateaus; ++i) v[i] = f.plateau_value(i);

  // Pareto frontier over (gap, spike): keep entries with increasing gap and
  // increasing value.
  std::map<double, double> frontier;
  auto insert = [&frontier](double gap, double val) {
    auto it = frontier.lower_bound(gap);
    if (it != frontier.begin() && std::prev(it)->second >= val) return;
    if (it != frontier.end() && it->first == gap) {
      if (it->second >= val) return;
    }
    while (it != frontier.end() && it->second <= val) it = frontier.erase(it);
    frontier.insert({gap, val});
  };

  std::vector<double> wmax(plateaus), wmin(plateaus), pv(plateaus);
  const auto& k = kernels::active();
  for (std::size_t s = 2; s < plateaus; ++s) {
    const std::size_t w = s - 1;
    k.windowed_max(v.data(), plateaus, w, wmax.data());
    k.windowed_min(v.data(), plateaus, w, wmin.data());
    const std::size_t count = plateaus - s;
    k.spike_values(v.data(), v.data() + s, wmax.data() + 1, wmin.data() + 1, count,
                   pv.data());
    for (std::size_t a = 0; a < count; ++a) {
      if (pv[a] > 0.0) insert(jumps[a + s - 1].time - jumps[a].time, pv[a]);
    }
  }

  std::vector<std::pair<double, double>> entries;
  entries.reserve(frontier.size());
  for (const auto& [gap, val] : frontier) entries.emplace_back(gap * 0.5, val);
  return finalize_profile(std::move(entries));
}

}  // namespace

OscillationProfile oscillation_profile(const StepFunction& f, std::size_t grid_n) {
  if (f.plateau_count() < 3) return OscillationProfile{};
  if (grid_n == 0) grid_n = detect_grid(f);
  if (grid_n > 0) return profile_on_grid(f, grid_n);
  return profile_general(f);
}

namespace {

// sup_z [A(z) - B(z + eps)] over the whole axis, exact for step profiles.
double shifted_gap(const OscillationProfile& a, const OscillationProfile& b, double eps) {
  std::vector<double> zs;
  zs.reserve(2 * (a.breaks.size() + b.breaks.size()) + 4);
  for (double r : a.breaks) zs.push_back(std::log(r));
  for (double r : b.breaks) zs.push_back(std::log(r) - eps);
  zs.push_back(0.0);
  zs.push_back(-1e300);  // far left: both profiles vanish there
  std::sort(zs.begin(), zs.end());
  double worst = -std::numeric_limits<double>::infinity();
  double prev = -std::numeric_limits<double>::infinity();
  for (double z : zs) {
    if (prev > -std::numeric_limits<double>::infinity() && z > prev) {
      const double mid = prev + (z - prev) * 0.5;
      worst = std::max(worst, a.eval_log(mid) - b.eval_log(mid + eps));
    }
    worst = std::max(worst, a.eval_log(z) - b.eval_log(z + eps));
    prev = z;
  }
  worst = std::max(worst, a.eval_log(1.0) - b.eval_log(1.0 + eps));
  return worst;
}

bool levy_within(const OscillationProfile& a, const OscillationProfile& b, double eps) {
  return shifted_gap(a, b, eps) <= eps && shifted_gap(b, a, eps) <= eps;
}

}  // namespace

double levy_distance(const OscillationProfile& a, const OscillationProfile& b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("levy_distance: tol must be positive");
  if (levy_within(a, b, 0.0)) return 0.0;
  double lo = 0.0;
  double hi = std::max({a.max_value(), b.max_value(), tol});
  while (!levy_within(a, b, hi)) hi *= 2.0;
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) * 0.5;
    if (levy_within(a, b, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + (hi - lo) * 0.5;
}

double d_m1_star(const StepFunction& f, const StepFunction& g, double tol,
                 std::size_t grid_n) {
  const double m2 = d_m2(f, g, tol);
  const double lam =
      levy_distance(oscillation_profile(f, grid_n), oscillation_profile(g, grid_n), tol);
  return m2 + lam;
}

}  // namespace summax

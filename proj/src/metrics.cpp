#include "summax/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace summax {

double d_uniform(const StepFunction& f, const StepFunction& g) {
  double best = std::abs(f.initial_value() - g.initial_value());
  double fv = f.initial_value(), gv = g.initial_value();
  const auto& fj = f.jumps();
  const auto& gj = g.jumps();
  std::size_t i = 0, j = 0;
  while (i < fj.size() || j < gj.size()) {
    if (j == gj.size() || (i < fj.size() && fj[i].time <= gj[j].time)) {
      if (j < gj.size() && gj[j].time == fj[i].time) gv = gj[j++].value;
      fv = fj[i++].value;
    } else {
      gv = gj[j++].value;
    }
    best = std::max(best, std::abs(fv - gv));
  }
  return best;
}

namespace {

// Sliding window over the plateaus of g. The y-range of the completed graph
// of g over the time window [t-eps, t+eps] is the interval
//   [min_j value(j), max_j value(j)]
// over all plateaus j whose closure intersects the window; the graph is a
// connected curve, so the range really is an interval. Queries arrive in
// nondecreasing t, which keeps the index window monotone.
class PlateauWindow {
 public:
  explicit PlateauWindow(const StepFunction& g) : g_(g) {}

  void reset(double eps) {
    eps_ = eps;
    jlo_ = 0;
    jhi_ = std::size_t(-1);
    maxq_.clear();
    minq_.clear();
  }

  // Range of g's graph over [t-eps, t+eps]; t must not decrease across calls.
  void range_at(double t, double* lo, double* hi) {
    const std::size_t count = g_.plateau_count();
    while (jhi_ + 1 < count && g_.plateau_start(jhi_ + 1) <= t + eps_) {
      ++jhi_;
      push(jhi_);
    }
    while (g_.plateau_end(jlo_) < t - eps_) ++jlo_;
    while (!maxq_.empty() && maxq_.front() < jlo_) maxq_.pop_front();
    while (!minq_.empty() && minq_.front() < jlo_) minq_.pop_front();
    *lo = g_.plateau_value(minq_.front());
    *hi = g_.plateau_value(maxq_.front());
  }

 private:
  void push(std::size_t j) {
    const double v = g_.plateau_value(j);
    while (!maxq_.empty() && g_.plateau_value(maxq_.back()) <= v) maxq_.pop_back();
    maxq_.push_back(j);
    while (!minq_.empty() && g_.plateau_value(minq_.back()) >= v) minq_.pop_back();
    minq_.push_back(j);
  }

  const StepFunction& g_;
  double eps_ = 0.0;
  std::size_t jlo_ = 0;
  std::size_t jhi_ = std::size_t(-1);
  std::deque<std::size_t> maxq_, minq_;
};

// Does every point of the completed graph of f lie within max-norm eps of
// the completed graph of g? Exact decision.
//
// Along a horizontal segment of f at height w, the condition is
// w in [range_lo(t)-eps, range_hi(t)+eps] for all t in the plateau closure;
// range_lo/hi are piecewise constant in t with breakpoints at g's jump times
// shifted by +/-eps, so checking at those breakpoints, at the plateau ends,
// and at midpoints of consecutive check points decides the condition exactly.
// A vertical segment of f needs its whole y-extent inside the fattened range
// at the jump time.
bool one_sided_within(const StepFunction& f, const StepFunction& g, double eps) {
  PlateauWindow window(g);
  window.reset(eps);

  const auto& fj = f.jumps();
  const auto& gj = g.jumps();

  // Three sorted event streams: f breakpoints (with endpoints), g jump times
  // shifted left, g jump times shifted right.
  std::size_t ia = 0, ib = 0, ic = 0;
  const std::size_t na = fj.size() + 2;

  auto a_val = [&](std::size_t i) {
    if (i == 0) return 0.0;
    if (i == na - 1) return 1.0;
    return fj[i - 1].time;
  };

  double prev_t = -1.0;
  std::size_t plateau = 0;  // current plateau index of f

  // Folds the three streams together, emitting midpoints between consecutive
  // evaluation points so every constancy piece of the fattened range gets
  // inspected.
  auto process = [&](double t, bool f_jump_here, std::size_t f_jump_index) -> bool {
    double lo, hi;
    window.range_at(t, &lo, &hi);
    while (f.plateau_end(plateau) < t) ++plateau;
    std::size_t p = plateau;
    while (true) {
      const double w = f.plateau_value(p);
      if (w < lo - eps || w > hi + eps) return false;
      if (p + 1 < f.plateau_count() && f.plateau_end(p) == t) {
        ++p;
        continue;
      }
      break;
    }
    if (f_jump_here) {
      const double before = f_jump_index == 0 ? f.initial_value() : fj[f_jump_index - 1].value;
      const double after = fj[f_jump_index].value;
      const double ylo = std::min(before, after);
      const double yhi = std::max(before, after);
      if (ylo < lo - eps || yhi > hi + eps) return false;
    }
    return true;
  };

  while (ia < na || ib < gj.size() || ic < gj.size()) {
    double t = std::numeric_limits<double>::infinity();
    if (ia < na) t = std::min(t, a_val(ia));
    if (ib < gj.size()) t = std::min(t, gj[ib].time - eps);
    if (ic < gj.size()) t = std::min(t, gj[ic].time + eps);

    bool f_jump_here = false;
    std::size_t f_jump_index = 0;
    while (ia < na && a_val(ia) == t) {
      if (ia >= 1 && ia <= fj.size()) {
        f_jump_here = true;
        f_jump_index = ia - 1;
      }
      ++ia;
    }
    while (ib < gj.size() && gj[ib].time - eps == t) ++ib;
    while (ic < gj.size() && gj[ic].time + eps == t) ++ic;

    if (t < 0.0) continue;
    if (t > 1.0) break;

    if (prev_t >= 0.0 && t > prev_t) {
      const double mid = prev_t + (t - prev_t) * 0.5;
      if (!process(mid, false, 0)) return false;
    }
    if (!process(t, f_jump_here, f_jump_index)) return false;
    prev_t = t;
  }
  return true;
}

}  // namespace

bool m2_within(const StepFunction& f, const StepFunction& g, double eps) {
  if (eps < 0.0) return false;
  return one_sided_within(f, g, eps) && one_sided_within(g, f, eps);
}

double d_m2(const StepFunction& f, const StepFunction& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("d_m2: tol must be positive");
  if (f == g) return 0.0;
  double hi = d_uniform(f, g);  // Hausdorff distance never exceeds the uniform one
  if (hi == 0.0) return 0.0;
  double lo = 0.0;
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) * 0.5;
    if (m2_within(f, g, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + (hi - lo) * 0.5;
}

double d_product_m2(const MultiPath& f, const MultiPath& g, double tol) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("d_product_m2: dimension mismatch");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    best = std::max(best, d_m2(f[i], g[i], tol));
  }
  return best;
}

bool product_m2_within(const MultiPath& f, const MultiPath& g, double eps) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("product_m2_within: dimension mismatch");
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!m2_within(f[i], g[i], eps)) return false;
  }
  return true;
}

}  // namespace summax

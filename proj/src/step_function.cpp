#include "summax/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace summax {

StepFunction::StepFunction(double initial_value, std::vector<Jump> jumps)
    : initial_(initial_value) {
  double prev_time = 0.0;
  double prev_value = initial_value;
  jumps_.reserve(jumps.size());
  for (const Jump& j : jumps) {
    if (!(j.time > prev_time) || !(j.time <= 1.0)) {
      throw std::invalid_argument(
          "StepFunction: jump times must be strictly increasing within (0,1]");
    }
    prev_time = j.time;
    if (j.value == prev_value) continue;  // zero-height jump, normalize away
    jumps_.push_back(j);
    prev_value = j.value;
  }
}

StepFunction StepFunction::from_grid(double initial_value, std::span<const double> values,
                                     std::size_t n) {
  if (values.size() != n) throw std::invalid_argument("from_grid: values.size() != n");
  std::vector<Jump> jumps;
  double prev = initial_value;
  for (std::size_t i = 1; i <= n; ++i) {
    const double v = values[i - 1];
    if (v != prev) {
      jumps.push_back({double(i) / double(n), v});
      prev = v;
    }
  }
  return StepFunction(initial_value, std::move(jumps));
}

double StepFunction::eval(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("StepFunction::eval: t outside [0,1]");
  // Last jump with time <= t.
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), t,
                             [](double lhs, const Jump& j) { return lhs < j.time; });
  if (it == jumps_.begin()) return initial_;
  return std::prev(it)->value;
}

double StepFunction::left_limit(double t) const {
  if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("StepFunction::left_limit: t outside (0,1]");
  auto it = std::lower_bound(jumps_.begin(), jumps_.end(), t,
                             [](const Jump& j, double rhs) { return j.time < rhs; });
  if (it == jumps_.begin()) return initial_;
  return std::prev(it)->value;
}

double StepFunction::min_value() const {
  double m = initial_;
  for (const Jump& j : jumps_) m = std::min(m, j.value);
  return m;
}

double StepFunction::max_value() const {
  double m = initial_;
  for (const Jump& j : jumps_) m = std::max(m, j.value);
  return m;
}

bool StepFunction::is_nondecreasing() const {
  double prev = initial_;
  for (const Jump& j : jumps_) {
    if (j.value < prev) return false;
    prev = j.value;
  }
  return true;
}

StepFunction pointwise_max(const StepFunction& f, const StepFunction& g) {
  std::vector<StepFunction::Jump> jumps;
  jumps.reserve(f.jump_count() + g.jump_count());
  double fv = f.initial_value(), gv = g.initial_value();
  std::size_t i = 0, j = 0;
  const auto& fj = f.jumps();
  const auto& gj = g.jumps();
  while (i < fj.size() || j < gj.size()) {
    double t;
    if (j == gj.size() || (i < fj.size() && fj[i].time <= gj[j].time)) {
      t = fj[i].time;
      if (j < gj.size() && gj[j].time == t) gv = gj[j++].value;
      fv = fj[i++].value;
    } else {
      t = gj[j].time;
      gv = gj[j++].value;
    }
    jumps.push_back({t, std::max(fv, gv)});
  }
  return StepFunction(std::max(f.initial_value(), g.initial_value()), std::move(jumps));
}

StepFunction scale(const StepFunction& f, double c) {
  std::vector<StepFunction::Jump> jumps = f.jumps();
  for (auto& j : jumps) j.value *= c;
  return StepFunction(c * f.initial_value(), std::move(jumps));
}

}  // namespace summax

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace summax {

// Piecewise-constant cadlag function on [0,1]. Jump times are strictly
// increasing and lie in (0,1]; consecutive equal values are normalized away
// at construction so the representation is canonical.
class StepFunction {
 public:
  struct Jump {
    double time;
    double value;  // value taken at and after `time`

    bool operator==(const Jump&) const = default;
  };

  StepFunction() : initial_(0.0) {}
  explicit StepFunction(double initial_value) : initial_(initial_value) {}
  StepFunction(double initial_value, std::vector<Jump> jumps);

  static StepFunction constant(double value) { return StepFunction(value); }
  // Path on the grid {i/n}: value[i-1] holds on [i/n, (i+1)/n).
  static StepFunction from_grid(double initial_value, std::span<const double> values,
                                std::size_t n);

  double initial_value() const { return initial_; }
  const std::vector<Jump>& jumps() const { return jumps_; }
  std::size_t jump_count() const { return jumps_.size(); }

  // Right-continuous evaluation; throws std::domain_error outside [0,1].
  double eval(double t) const;
  // Left limit at t in (0,1].
  double left_limit(double t) const;

  double value_at_one() const { return jumps_.empty() ? initial_ : jumps_.back().value; }

  double min_value() const;
  double max_value() const;
  bool is_nondecreasing() const;

  bool operator==(const StepFunction& other) const = default;

  // Plateau view: plateau i covers [start_time(i), start_time(i+1)) with
  // plateau_value(i); plateau jump_count() is the last one and is closed at 1.
  std::size_t plateau_count() const { return jumps_.size() + 1; }
  double plateau_value(std::size_t i) const { return i == 0 ? initial_ : jumps_[i - 1].value; }
  double plateau_start(std::size_t i) const { return i == 0 ? 0.0 : jumps_[i - 1].time; }
  double plateau_end(std::size_t i) const {
    return i == jumps_.size() ? 1.0 : jumps_[i].time;
  }

 private:
  double initial_;
  std::vector<Jump> jumps_;
};

// Fixed-length tuple of paths sharing the domain [0,1].
using MultiPath = std::vector<StepFunction>;

// Pointwise maximum; exact on the merged jump grid.
StepFunction pointwise_max(const StepFunction& f, const StepFunction& g);
// Scale all values (initial and jump targets) by c.
StepFunction scale(const StepFunction& f, double c);

}  // namespace summax

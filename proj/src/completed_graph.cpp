#include "summax/completed_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace summax {

CompletedGraph completed_graph(const StepFunction& f) {
  CompletedGraph g;
  g.segments.reserve(2 * f.jump_count() + 1);
  double t = 0.0;
  double v = f.initial_value();
  for (const auto& j : f.jumps()) {
    g.segments.push_back({t, v, j.time, v});
    g.segments.push_back({j.time, v, j.time, j.value});
    t = j.time;
    v = j.value;
  }
  g.segments.push_back({t, v, 1.0, v});
  return g;
}

namespace {

inline double axis_dist(double x, double lo, double hi) {
  if (x < lo) return lo - x;
  if (x > hi) return x - hi;
  return 0.0;
}

}  // namespace

double distance_to_graph(double t, double y, const CompletedGraph& graph) {
  double best = std::numeric_limits<double>::infinity();
  for (const GraphSegment& s : graph.segments) {
    const double dt = axis_dist(t, std::min(s.t0, s.t1), std::max(s.t0, s.t1));
    const double dy = axis_dist(y, std::min(s.y0, s.y1), std::max(s.y0, s.y1));
    best = std::min(best, std::max(dt, dy));
  }
  return best;
}

}  // namespace summax

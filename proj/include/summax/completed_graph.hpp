#pragma once

#include <vector>

#include "summax/step_function.hpp"

namespace summax {

// Completed graph of a step function: horizontal plateau segments alternating
// with vertical segments that fill each jump. Segments are axis-aligned,
// consecutive ones share an endpoint, and the union is the closure of the
// graph in [0,1] x R.
struct GraphSegment {
  double t0, y0;  // start point
  double t1, y1;  // end point; t0 == t1 (vertical) or y0 == y1 (horizontal)
  bool horizontal() const { return y0 == y1; }
};

struct CompletedGraph {
  std::vector<GraphSegment> segments;
};

CompletedGraph completed_graph(const StepFunction& f);

// Max-norm distance from a point to the union of segments.
double distance_to_graph(double t, double y, const CompletedGraph& graph);

}  // namespace summax

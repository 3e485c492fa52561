#pragma once

#include <cstdint>
#include <utility>

#include "summax/point_set.hpp"
#include "summax/step_function.hpp"
#include "summax/tail_model.hpp"

namespace summax {

// A point of a time-space point measure on [0,1] x (R \ {0}).
struct MeasureAtom {
  double t;
  double x;
};

// Sum-maximum functional applied to a point measure: truncated running sum
// of the marks, plus one-sided running maxima (untruncated), each as a step
// function with the "max of nothing is zero" convention. Atoms need not be
// time-sorted. Accepts both sampled Poisson sets and empirical measures with
// atoms (i/n, Z_i/a_n).
MultiPath sum_max_functional(std::vector<MeasureAtom> atoms, double u);
MultiPath sum_max_functional(const PointSet& points, double u);

// Truncated-series path of the limiting stable process:
// jumps P_i Q_i at T_i plus the linear centering/drift term represented as a
// staircase with `grid_nodes` steps (grid_nodes = 0 uses one node per atom).
// Requires points.u_min <= 0.01 so the neglected small-jump error is tiny at
// the tail indices of interest.
StepFunction stable_levy_path(const PointSet& points, const TailModel& model,
                              std::uint64_t grid_nodes = 0);

// Extremal processes from positive-mark and negative-mark atoms.
std::pair<StepFunction, StepFunction> extremal_paths(const PointSet& points);

// Joint limit (C0 * V, max(C1 * M1, C2 * M2)). The coefficient triple must be
// drawn independently of the point set (separate RNG streams).
struct JointLimitSample {
  StepFunction v_path;
  StepFunction m_path;
};

JointLimitSample joint_limit_sample(const PointSet& points, const TailModel& model,
                                    double c0, double c1, double c2,
                                    std::uint64_t grid_nodes = 0);

}  // namespace summax

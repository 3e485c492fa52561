#include "summax/limit_processes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace summax {

MultiPath sum_max_functional(std::vector<MeasureAtom> atoms, double u) {
  if (!(u > 0.0)) throw std::invalid_argument("sum_max_functional: u must be positive");
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const MeasureAtom& a, const MeasureAtom& b) { return a.t < b.t; });
  std::vector<StepFunction::Jump> sum_jumps, pos_jumps, neg_jumps;
  sum_jumps.reserve(atoms.size());
  pos_jumps.reserve(atoms.size());
  neg_jumps.reserve(atoms.size());
  double acc = 0.0, pmax = 0.0, nmax = 0.0;
  std::size_t i = 0;
  while (i < atoms.size()) {
    const double t = atoms[i].t;
    while (i < atoms.size() && atoms[i].t == t) {
      const double x = atoms[i].x;
      if (std::abs(x) > u) acc += x;
      if (x > 0.0) {
        pmax = std::max(pmax, x);
      } else if (x < 0.0) {
        nmax = std::max(nmax, -x);
      }
      ++i;
    }
    sum_jumps.push_back({t, acc});
    pos_jumps.push_back({t, pmax});
    neg_jumps.push_back({t, nmax});
  }
  MultiPath out;
  out.push_back(StepFunction(0.0, std::move(sum_jumps)));
  out.push_back(StepFunction(0.0, std::move(pos_jumps)));
  out.push_back(StepFunction(0.0, std::move(neg_jumps)));
  return out;
}

MultiPath sum_max_functional(const PointSet& points, double u) {
  std::vector<MeasureAtom> atoms;
  atoms.reserve(points.atoms.size());
  for (const auto& a : points.atoms) {
    atoms.push_back({a.t, a.magnitude * double(a.sign)});
  }
  return sum_max_functional(std::move(atoms), u);
}

StepFunction stable_levy_path(const PointSet& points, const TailModel& model,
                              std::uint64_t grid_nodes) {
  if (!(points.u_min <= 0.01)) {
    throw std::invalid_argument(
        "stable_levy_path: too few atoms (u_min > 0.01); increase atom_count");
  }
  // Compensator plus drift collapses to a single linear term; for alpha < 1
  // it is exactly the mean of the discarded small jumps.
  const double slope = drift_b(model) - mu_integral(model, points.u_min);
  const std::uint64_t grid = grid_nodes > 0 ? grid_nodes : points.atoms.size();

  std::vector<const PointSet::Atom*> by_time;
  by_time.reserve(points.atoms.size());
  for (const auto& a : points.atoms) by_time.push_back(&a);
  std::stable_sort(by_time.begin(), by_time.end(),
                   [](const auto* a, const auto* b) { return a->t < b->t; });

  std::vector<StepFunction::Jump> jumps;
  jumps.reserve(by_time.size() + (slope != 0.0 ? grid : 0));
  double acc = 0.0;
  std::size_t ai = 0;
  std::uint64_t gi = 1;
  double drift_level = 0.0;
  while (ai < by_time.size() || (slope != 0.0 && gi <= grid)) {
    const double at = ai < by_time.size() ? by_time[ai]->t : 2.0;
    const double gt = (slope != 0.0 && gi <= grid) ? double(gi) / double(grid) : 2.0;
    if (at <= gt) {
      const double t = at;
      while (ai < by_time.size() && by_time[ai]->t == t) {
        acc += by_time[ai]->magnitude * double(by_time[ai]->sign);
        ++ai;
      }
      if (t == gt) {
        drift_level = slope * (double(gi) / double(grid));
        ++gi;
      }
      jumps.push_back({t, acc + drift_level});
    } else {
      drift_level = slope * (double(gi) / double(grid));
      jumps.push_back({gt, acc + drift_level});
      ++gi;
    }
  }
  return StepFunction(0.0, std::move(jumps));
}

std::pair<StepFunction, StepFunction> extremal_paths(const PointSet& points) {
  std::vector<const PointSet::Atom*> by_time;
  by_time.reserve(points.atoms.size());
  for (const auto& a : points.atoms) by_time.push_back(&a);
  std::stable_sort(by_time.begin(), by_time.end(),
                   [](const auto* a, const auto* b) { return a->t < b->t; });
  std::vector<StepFunction::Jump> pos, neg;
  double pmax = 0.0, nmax = 0.0;
  for (const auto* a : by_time) {
    if (a->sign > 0) {
      if (a->magnitude > pmax) {
        pmax = a->magnitude;
        pos.push_back({a->t, pmax});
      }
    } else if (a->magnitude > nmax) {
      nmax = a->magnitude;
      neg.push_back({a->t, nmax});
    }
  }
  return {StepFunction(0.0, std::move(pos)), StepFunction(0.0, std::move(neg))};
}

JointLimitSample joint_limit_sample(const PointSet& points, const TailModel& model,
                                    double c0, double c1, double c2,
                                    std::uint64_t grid_nodes) {
  auto [m1, m2] = extremal_paths(points);
  JointLimitSample sample;
  sample.v_path = scale(stable_levy_path(points, model, grid_nodes), c0);
  sample.m_path = pointwise_max(scale(m1, c1), scale(m2, c2));
  return sample;
}

}  // namespace summax

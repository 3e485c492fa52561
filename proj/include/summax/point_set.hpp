#pragma once

#include <cstdint>
#include <vector>

#include "summax/rng.hpp"
#include "summax/tail_model.hpp"

namespace summax {

// Marked Poisson atoms (T_i, P_i, Q_i): uniform times, magnitudes
// P_i = Gamma_i^{-1/alpha} from standard Poisson arrivals (strictly
// decreasing), signs with P(Q=+1) = p. The retained atoms are exactly those
// with magnitude above u_min = P_K.
struct PointSet {
  struct Atom {
    double t;
    double magnitude;
    int sign;  // +1 or -1
  };

  std::vector<Atom> atoms;  // in decreasing magnitude order
  double u_min = 0.0;
  double alpha = 0.0;
};

PointSet sample_point_set(const TailModel& model, std::uint64_t atom_count,
                          std::uint64_t seed, std::uint64_t rep = 0);

}  // namespace summax

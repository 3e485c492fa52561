#include "summax/point_set.hpp"

#include <cmath>
#include <stdexcept>

namespace summax {

PointSet sample_point_set(const TailModel& model, std::uint64_t atom_count,
                          std::uint64_t seed, std::uint64_t rep) {
  validate(model);
  if (atom_count < 1) throw std::invalid_argument("sample_point_set: atom_count >= 1");
  RngStream rng = make_stream(seed, StreamPurpose::atoms, rep);
  PointSet ps;
  ps.alpha = model.alpha;
  ps.atoms.resize(atom_count);
  double gamma = 0.0;
  for (auto& atom : ps.atoms) {
    gamma += rng.next_exponential();
    atom.magnitude = std::pow(gamma, -1.0 / model.alpha);
    atom.t = rng.next_uniform();
    atom.sign = rng.next_uniform() < model.p ? +1 : -1;
  }
  ps.u_min = ps.atoms.back().magnitude;
  return ps;
}

}  // namespace summax

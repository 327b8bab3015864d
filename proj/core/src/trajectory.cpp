#include "areg/trajectory.hpp"

#include <limits>
#include <utility>

namespace areg {

Trajectory run_picard(const AveragedMap& map, const Vector& x0, long steps,
                      std::optional<double> stop_eps, bool keep_points) {
  if (steps < 1) throw RejectedInputError("run_picard requires steps >= 1");
  require_same_dim(x0.size(), map.dim(), "picard start point");
  require_finite(x0, "picard start point");

  Trajectory t;
  t.start = x0;
  t.displacements.reserve(static_cast<size_t>(steps));
  if (keep_points) t.points.emplace().push_back(x0);

  Vector x = x0;
  double prev = std::numeric_limits<double>::infinity();
  for (long n = 0; n < steps; ++n) {
    Vector next = map.eval(x);
    if (!next.allFinite()) {
      throw NumericFailureError("picard iterate became non-finite", n);
    }
    const double disp = (x - next).norm();
    if (disp > prev + kDisplacementSlack) {
      throw InternalConsistencyError(
          "displacement increased along the trajectory; the map cannot be averaged");
    }
    prev = disp;
    t.displacements.push_back(disp);
    if (keep_points) t.points->push_back(next);
    x = std::move(next);
    t.steps = n + 1;
    if (stop_eps && disp <= *stop_eps) break;
  }
  return t;
}

FirstHit first_hit_index(const AveragedMap& map, const Vector& x0, double eps, long cap) {
  if (cap < 1) throw RejectedInputError("first_hit_index requires cap >= 1");
  if (!(eps > 0.0)) throw RejectedInputError("first_hit_index requires eps > 0");
  require_same_dim(x0.size(), map.dim(), "picard start point");

  FirstHit hit;
  hit.cap = cap;
  Vector x = x0;
  for (long n = 0; n <= cap; ++n) {
    Vector next = map.eval(x);
    if (!next.allFinite()) {
      throw NumericFailureError("picard iterate became non-finite", n);
    }
    if ((x - next).norm() <= eps) {
      hit.index = n;
      return hit;
    }
    x = std::move(next);
  }
  return hit;
}

}  // namespace areg

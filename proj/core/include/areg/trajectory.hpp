#pragma once

#include <optional>
#include <vector>

#include "areg/operators.hpp"
#include "areg/vector.hpp"

namespace areg {

/// Recorded Picard iteration: displacements[n] = |R^n x - R^{n+1} x|.
/// Displacements of an averaged map never increase (up to rounding slack).
struct Trajectory {
  std::vector<double> displacements;
  std::optional<std::vector<Vector>> points;  // iterates x_0, x_1, ... when kept
  Vector start;
  long steps = 0;
};

inline constexpr double kDisplacementSlack = 1e-9;

/// Iterates x_{n+1} = R(x_n) for `steps` steps, recording displacement per
/// step; stops early once displacement <= stop_eps when given.  A non-finite
/// iterate raises NumericFailureError with the failing step.
Trajectory run_picard(const AveragedMap& map, const Vector& x0, long steps,
                      std::optional<double> stop_eps = {}, bool keep_points = false);

/// Smallest n with displacement(n) <= eps, if it occurs within `cap` steps.
struct FirstHit {
  std::optional<long> index;
  long cap = 0;
  bool exceeded() const { return !index.has_value(); }
};

FirstHit first_hit_index(const AveragedMap& map, const Vector& x0, double eps, long cap);

}  // namespace areg

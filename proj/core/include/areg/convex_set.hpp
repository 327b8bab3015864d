#pragma once

#include "areg/vector.hpp"

namespace areg {

/// A closed convex subset supporting exact metric projection.
class ConvexSet {
 public:
  enum class Kind { halfspace, ball, box, affine_subspace };

  /// { x : <normal, x> <= offset }; the normal must be nonzero.
  static ConvexSet halfspace(Vector normal, double offset);

  static ConvexSet ball(Vector center, double radius);

  /// { x : lower <= x <= upper } componentwise.
  static ConvexSet box(Vector lower, Vector upper);

  /// anchor + span(columns of basis); columns must be orthonormal within 1e-12.
  static ConvexSet affine_subspace(Matrix basis, Vector anchor);

  Kind kind() const { return kind_; }
  Eigen::Index dim() const { return dim_; }

  /// Nearest point of the set; idempotent and firmly nonexpansive.
  Vector project(const Vector& x) const;

  bool contains(const Vector& x, double tol = 1e-12) const;

  // descriptor accessors (serialization + tests)
  const Vector& normal() const { return a_; }
  double offset() const { return c_; }
  const Vector& center() const { return a_; }
  double radius() const { return c_; }
  const Vector& lower() const { return a_; }
  const Vector& upper() const { return b_; }
  const Matrix& basis() const { return m_; }
  const Vector& anchor() const { return a_; }

 private:
  ConvexSet(Kind kind, Eigen::Index dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  Eigen::Index dim_;
  Vector a_;  // normal / center / lower / anchor
  Vector b_;  // upper
  Matrix m_;  // affine basis (dim x k)
  double c_ = 0.0;  // offset / radius
  double norm2_ = 0.0;  // cached squared norm of the halfspace normal
};

inline Vector project(const ConvexSet& set, const Vector& x) { return set.project(x); }

}  // namespace areg

#include "areg/convex_set.hpp"

#include <algorithm>

namespace areg {

ConvexSet ConvexSet::halfspace(Vector normal, double offset) {
  require_finite(normal, "halfspace normal");
  require_dim_valid(normal.size(), "halfspace");
  const double n2 = normal.squaredNorm();
  if (n2 <= 0.0) throw RejectedInputError("halfspace normal must be nonzero");
  if (!std::isfinite(offset)) throw RejectedInputError("halfspace offset must be finite");
  ConvexSet s(Kind::halfspace, normal.size());
  s.a_ = std::move(normal);
  s.c_ = offset;
  s.norm2_ = n2;
  return s;
}

ConvexSet ConvexSet::ball(Vector center, double radius) {
  require_finite(center, "ball center");
  require_dim_valid(center.size(), "ball");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw RejectedInputError("ball radius must be positive and finite");
  }
  ConvexSet s(Kind::ball, center.size());
  s.a_ = std::move(center);
  s.c_ = radius;
  return s;
}

ConvexSet ConvexSet::box(Vector lower, Vector upper) {
  require_finite(lower, "box lower");
  require_finite(upper, "box upper");
  require_same_dim(upper.size(), lower.size(), "box bounds");
  require_dim_valid(lower.size(), "box");
  if (((upper - lower).array() < 0.0).any()) {
    throw RejectedInputError("box requires lower <= upper componentwise");
  }
  ConvexSet s(Kind::box, lower.size());
  s.a_ = std::move(lower);
  s.b_ = std::move(upper);
  return s;
}

ConvexSet ConvexSet::affine_subspace(Matrix basis, Vector anchor) {
  require_finite(basis, "affine basis");
  require_finite(anchor, "affine anchor");
  require_dim_valid(anchor.size(), "affine subspace");
  if (basis.rows() != anchor.size()) {
    throw DimensionMismatchError("affine basis rows must match the anchor dimension");
  }
  if (basis.cols() < 1 || basis.cols() > basis.rows()) {
    throw RejectedInputError("affine basis needs between 1 and dim direction columns");
  }
  const Matrix gram = basis.transpose() * basis;
  const Matrix id = Matrix::Identity(basis.cols(), basis.cols());
  if ((gram - id).cwiseAbs().maxCoeff() > 1e-12) {
    throw RejectedInputError("affine basis columns must be orthonormal within 1e-12");
  }
  ConvexSet s(Kind::affine_subspace, anchor.size());
  s.m_ = std::move(basis);
  s.a_ = std::move(anchor);
  return s;
}

Vector ConvexSet::project(const Vector& x) const {
  require_same_dim(x.size(), dim_, "projection input");
  require_finite(x, "projection input");
  switch (kind_) {
    case Kind::halfspace: {
      const double excess = a_.dot(x) - c_;
      if (excess <= 0.0) return x;
      return x - (excess / norm2_) * a_;
    }
    case Kind::ball: {
      const Vector r = x - a_;
      const double n = r.norm();
      if (n <= c_) return x;
      return a_ + (c_ / n) * r;
    }
    case Kind::box:
      return x.cwiseMax(a_).cwiseMin(b_);
    case Kind::affine_subspace:
      return a_ + m_ * (m_.transpose() * (x - a_));
  }
  throw InternalConsistencyError("unreachable convex set kind");
}

bool ConvexSet::contains(const Vector& x, double tol) const {
  require_same_dim(x.size(), dim_, "containment input");
  switch (kind_) {
    case Kind::halfspace:
      return a_.dot(x) - c_ <= tol * std::sqrt(norm2_);
    case Kind::ball:
      return (x - a_).norm() <= c_ + tol;
    case Kind::box:
      return ((x - a_).array() >= -tol).all() && ((b_ - x).array() >= -tol).all();
    case Kind::affine_subspace:
      return (x - project(x)).norm() <= tol;
  }
  throw InternalConsistencyError("unreachable convex set kind");
}

}  // namespace areg

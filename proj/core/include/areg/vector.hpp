#pragma once

#include <Eigen/Dense>

#include <string>

#include "areg/errors.hpp"

namespace areg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Largest ambient dimension the library accepts.
inline constexpr Eigen::Index kMaxDimension = 1024;

inline void require_finite(const Vector& x, const char* what) {
  if (!x.allFinite()) {
    throw RejectedInputError(std::string(what) + ": vector has a non-finite entry");
  }
}

inline void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw RejectedInputError(std::string(what) + ": matrix has a non-finite entry");
  }
}

inline void require_dim_valid(Eigen::Index d, const char* what) {
  if (d < 1 || d > kMaxDimension) {
    throw RejectedInputError(std::string(what) + ": dimension " + std::to_string(d) +
                             " outside [1, " + std::to_string(kMaxDimension) + "]");
  }
}

inline void require_same_dim(Eigen::Index got, Eigen::Index want, const char* what) {
  if (got != want) {
    throw DimensionMismatchError(std::string(what) + ": dimension " + std::to_string(got) +
                                 " does not match expected " + std::to_string(want));
  }
}

}  // namespace areg

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "areg/convex_set.hpp"
#include "areg/vector.hpp"

namespace areg {

/// Construction-time sampling policy for the nonexpansiveness contract.
struct CheckPolicy {
  int pairs = 256;
  double slack = 1e-9;
  bool enabled = true;
  uint64_t seed = 0xa11ce5eedULL;
};

class MonotoneSource;

/// An evaluable 1-Lipschitz map.  Linear kinds are certified by operator
/// norm (<= 1 + 1e-12); evaluable kinds are spot-checked on seeded sample
/// pairs at construction.
class NonexpansiveMap {
 public:
  struct Impl {
    virtual ~Impl() = default;
    virtual Vector eval(const Vector& x) const = 0;
    virtual Eigen::Index dim() const = 0;
    virtual const char* kind_name() const = 0;
  };

  static NonexpansiveMap projection(ConvexSet set, const CheckPolicy& policy = {});
  static NonexpansiveMap linear(Matrix m);
  static NonexpansiveMap rotation2d(double theta);
  static NonexpansiveMap negation(Eigen::Index dim);
  static NonexpansiveMap identity(Eigen::Index dim);
  static NonexpansiveMap composition(std::vector<NonexpansiveMap> maps,
                                     const CheckPolicy& policy = {});
  static NonexpansiveMap reflected_resolvent_of(MonotoneSource src,
                                                const CheckPolicy& policy = {});
  /// x -> q x + shift with q orthogonal within 1e-12.
  static NonexpansiveMap orthogonal_affine(Matrix q, Vector shift);
  /// x -> (r(x) - (1-alpha) x) / alpha for an evaluable r; the extraction
  /// used by compose, averaged_from_cocoercive and nonexpansive_part.
  static NonexpansiveMap extracted(std::function<Vector(const Vector&)> forward, double alpha,
                                   Eigen::Index dim, const CheckPolicy& policy = {});

  Vector eval(const Vector& x) const;
  Vector operator()(const Vector& x) const { return eval(x); }
  Eigen::Index dim() const { return impl_->dim(); }
  const char* kind_name() const { return impl_->kind_name(); }

  explicit NonexpansiveMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

/// R = (1-alpha) id + alpha T with T nonexpansive and alpha strictly inside
/// (0,1); evaluation uses exactly that expression.
class AveragedMap {
 public:
  AveragedMap(double alpha, NonexpansiveMap inner);

  Vector eval(const Vector& x) const;
  Vector operator()(const Vector& x) const { return eval(x); }
  double alpha() const { return alpha_; }
  const NonexpansiveMap& inner() const { return inner_; }
  Eigen::Index dim() const { return inner_.dim(); }

 private:
  double alpha_;
  NonexpansiveMap inner_;
};

/// A single-valued monotone operator with an evaluable resolvent: either a
/// matrix with PSD symmetric part or the gradient x -> Q x + q of a convex
/// quadratic.  A caller-asserted cocoercivity constant is spot-checked on
/// sampled pairs.
class MonotoneSource {
 public:
  enum class Kind { linear, quadratic_gradient };

  static MonotoneSource linear(Matrix m, std::optional<double> beta = {},
                               const CheckPolicy& policy = {});
  static MonotoneSource quadratic_gradient(Matrix q, Vector shift,
                                           std::optional<double> beta = {},
                                           const CheckPolicy& policy = {});

  Kind kind() const;
  Eigen::Index dim() const;
  Vector apply(const Vector& x) const;
  /// y solving y + A(y) = x.
  Vector resolve(const Vector& x) const;

  const Matrix& matrix() const;
  const Vector& shift() const;
  std::optional<double> asserted_beta() const;
  bool symmetric(double tol = 1e-12) const;

 private:
  struct Impl;
  explicit MonotoneSource(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

inline Vector eval(const NonexpansiveMap& map, const Vector& x) { return map.eval(x); }
inline Vector eval(const AveragedMap& map, const Vector& x) { return map.eval(x); }

/// J_A(x): the unique y with y + A(y) = x; firmly nonexpansive.
Vector resolvent(const MonotoneSource& src, const Vector& x);

/// R_A(x) = 2 J_A(x) - x.
Vector reflected_resolvent(const MonotoneSource& src, const Vector& x);

/// x - J_A(x); the resolvent of the inverse operator.
Vector inverse_resolvent(const MonotoneSource& src, const Vector& x);

inline constexpr double kDefaultCocoercivityCap = 1e6;

/// beta = 1 / lambda_max of the symmetric matrix, capped for the zero
/// operator.  Only symmetric representations carry this certificate.
double cocoercivity_constant(const MonotoneSource& src,
                             double zero_cap = kDefaultCocoercivityCap);

/// The (1+beta)^-1-averaged map evaluating as R_A.
AveragedMap averaged_from_cocoercive(const MonotoneSource& src, double beta,
                                     const CheckPolicy& policy = {});

/// T with T(x) = (R(x) - (1-alpha) x) / alpha.
NonexpansiveMap nonexpansive_part(const AveragedMap& map, const CheckPolicy& policy = {});

/// Sequential composition (first element applied first) with exact
/// star-combined averagedness bookkeeping.
AveragedMap compose(const std::vector<AveragedMap>& maps, const CheckPolicy& policy = {});

}  // namespace areg

#include "areg/operators.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <utility>

#include "areg/rates.hpp"
#include "areg/sampler.hpp"

namespace areg {

namespace {

void check_nonexpansive_sampled(const char* what,
                                const std::function<Vector(const Vector&)>& f,
                                Eigen::Index dim, const CheckPolicy& policy) {
  if (!policy.enabled) return;
  Sampler sampler(mix_seed(policy.seed, static_cast<uint64_t>(dim)));
  for (int i = 0; i < policy.pairs; ++i) {
    const Vector x = sampler.with_norm(dim, sampler.log_uniform(1e-2, 1e2));
    const Vector y = sampler.with_norm(dim, sampler.log_uniform(1e-2, 1e2));
    const double lhs = (f(x) - f(y)).norm();
    const double rhs = (x - y).norm();
    if (lhs > rhs + policy.slack) {
      throw RejectedInputError(std::string(what) +
                               ": sampled pair violates nonexpansiveness (|Tx-Ty| = " +
                               std::to_string(lhs) + " > |x-y| = " + std::to_string(rhs) + ")");
    }
  }
}

double operator_norm(const Matrix& m) {
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

struct ProjectionImpl final : NonexpansiveMap::Impl {
  explicit ProjectionImpl(ConvexSet set) : set(std::move(set)) {}
  Vector eval(const Vector& x) const override { return set.project(x); }
  Eigen::Index dim() const override { return set.dim(); }
  const char* kind_name() const override { return "projection"; }
  ConvexSet set;
};

struct LinearImpl final : NonexpansiveMap::Impl {
  explicit LinearImpl(Matrix m) : m(std::move(m)) {}
  Vector eval(const Vector& x) const override { return m * x; }
  Eigen::Index dim() const override { return m.rows(); }
  const char* kind_name() const override { return "linear"; }
  Matrix m;
};

struct Rotation2DImpl final : NonexpansiveMap::Impl {
  explicit Rotation2DImpl(double theta) : c(std::cos(theta)), s(std::sin(theta)) {}
  Vector eval(const Vector& x) const override {
    Vector y(2);
    y[0] = c * x[0] - s * x[1];
    y[1] = s * x[0] + c * x[1];
    return y;
  }
  Eigen::Index dim() const override { return 2; }
  const char* kind_name() const override { return "rotation2d"; }
  double c, s;
};

struct NegationImpl final : NonexpansiveMap::Impl {
  explicit NegationImpl(Eigen::Index d) : d(d) {}
  Vector eval(const Vector& x) const override { return -x; }
  Eigen::Index dim() const override { return d; }
  const char* kind_name() const override { return "negation"; }
  Eigen::Index d;
};

struct IdentityImpl final : NonexpansiveMap::Impl {
  explicit IdentityImpl(Eigen::Index d) : d(d) {}
  Vector eval(const Vector& x) const override { return x; }
  Eigen::Index dim() const override { return d; }
  const char* kind_name() const override { return "identity"; }
  Eigen::Index d;
};

struct CompositionImpl final : NonexpansiveMap::Impl {
  explicit CompositionImpl(std::vector<NonexpansiveMap> maps) : maps(std::move(maps)) {}
  Vector eval(const Vector& x) const override {
    Vector y = x;
    for (const NonexpansiveMap& m : maps) y = m.eval(y);
    return y;
  }
  Eigen::Index dim() const override { return maps.front().dim(); }
  const char* kind_name() const override { return "composition"; }
  std::vector<NonexpansiveMap> maps;
};

struct OrthogonalAffineImpl final : NonexpansiveMap::Impl {
  OrthogonalAffineImpl(Matrix q, Vector t) : q(std::move(q)), t(std::move(t)) {}
  Vector eval(const Vector& x) const override { return q * x + t; }
  Eigen::Index dim() const override { return q.rows(); }
  const char* kind_name() const override { return "orthogonal_affine"; }
  Matrix q;
  Vector t;
};

struct ExtractedImpl final : NonexpansiveMap::Impl {
  ExtractedImpl(std::function<Vector(const Vector&)> forward, double alpha, Eigen::Index d)
      : forward(std::move(forward)), alpha(alpha), d(d) {}
  Vector eval(const Vector& x) const override {
    return (forward(x) - (1.0 - alpha) * x) / alpha;
  }
  Eigen::Index dim() const override { return d; }
  const char* kind_name() const override { return "extracted"; }
  std::function<Vector(const Vector&)> forward;
  double alpha;
  Eigen::Index d;
};

}  // namespace

NonexpansiveMap NonexpansiveMap::projection(ConvexSet set, const CheckPolicy& policy) {
  auto impl = std::make_shared<ProjectionImpl>(std::move(set));
  check_nonexpansive_sampled("projection", [&impl](const Vector& x) { return impl->eval(x); },
                             impl->dim(), policy);
  return NonexpansiveMap(std::move(impl));
}

NonexpansiveMap NonexpansiveMap::linear(Matrix m) {
  require_finite(m, "linear map");
  if (m.rows() != m.cols()) throw RejectedInputError("linear map matrix must be square");
  require_dim_valid(m.rows(), "linear map");
  const double norm = operator_norm(m);
  if (norm > 1.0 + 1e-12) {
    throw RejectedInputError("linear map operator norm " + std::to_string(norm) +
                             " exceeds 1 + 1e-12");
  }
  return NonexpansiveMap(std::make_shared<LinearImpl>(std::move(m)));
}

NonexpansiveMap NonexpansiveMap::rotation2d(double theta) {
  if (!std::isfinite(theta)) throw RejectedInputError("rotation angle must be finite");
  return NonexpansiveMap(std::make_shared<Rotation2DImpl>(theta));
}

NonexpansiveMap NonexpansiveMap::negation(Eigen::Index dim) {
  require_dim_valid(dim, "negation");
  return NonexpansiveMap(std::make_shared<NegationImpl>(dim));
}

NonexpansiveMap NonexpansiveMap::identity(Eigen::Index dim) {
  require_dim_valid(dim, "identity");
  return NonexpansiveMap(std::make_shared<IdentityImpl>(dim));
}

NonexpansiveMap NonexpansiveMap::composition(std::vector<NonexpansiveMap> maps,
                                             const CheckPolicy& policy) {
  if (maps.size() < 2) throw RejectedInputError("composition requires at least two maps");
  const Eigen::Index d = maps.front().dim();
  for (const NonexpansiveMap& m : maps) require_same_dim(m.dim(), d, "composition factor");
  auto impl = std::make_shared<CompositionImpl>(std::move(maps));
  check_nonexpansive_sampled("composition", [&impl](const Vector& x) { return impl->eval(x); },
                             d, policy);
  return NonexpansiveMap(std::move(impl));
}

NonexpansiveMap NonexpansiveMap::orthogonal_affine(Matrix q, Vector shift) {
  require_finite(q, "orthogonal part");
  require_finite(shift, "affine shift");
  if (q.rows() != q.cols()) throw RejectedInputError("orthogonal part must be square");
  require_same_dim(shift.size(), q.rows(), "affine shift");
  const Matrix gram = q.transpose() * q;
  if ((gram - Matrix::Identity(q.rows(), q.cols())).cwiseAbs().maxCoeff() > 1e-12) {
    throw RejectedInputError("affine linear part must be orthogonal within 1e-12");
  }
  return NonexpansiveMap(std::make_shared<OrthogonalAffineImpl>(std::move(q), std::move(shift)));
}

NonexpansiveMap NonexpansiveMap::extracted(std::function<Vector(const Vector&)> forward,
                                           double alpha, Eigen::Index dim,
                                           const CheckPolicy& policy) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw RejectedInputError("extraction requires alpha strictly inside (0,1)");
  }
  require_dim_valid(dim, "extracted map");
  auto impl = std::make_shared<ExtractedImpl>(std::move(forward), alpha, dim);
  check_nonexpansive_sampled("extracted part", [&impl](const Vector& x) { return impl->eval(x); },
                             dim, policy);
  return NonexpansiveMap(std::move(impl));
}

Vector NonexpansiveMap::eval(const Vector& x) const {
  require_same_dim(x.size(), impl_->dim(), "map input");
  require_finite(x, "map input");
  return impl_->eval(x);
}

AveragedMap::AveragedMap(double alpha, NonexpansiveMap inner)
    : alpha_(alpha), inner_(std::move(inner)) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw RejectedInputError("averagedness parameter must lie strictly inside (0,1)");
  }
}

Vector AveragedMap::eval(const Vector& x) const {
  return (1.0 - alpha_) * x + alpha_ * inner_.eval(x);
}

struct MonotoneSource::Impl {
  Kind kind;
  Matrix m;        // operator matrix (linear) or hessian (quadratic gradient)
  Vector shift;    // quadratic gradient offset; empty for linear
  std::optional<double> beta;
  Eigen::PartialPivLU<Matrix> lu;  // factorization of I + m

  Vector apply(const Vector& x) const {
    Vector y = m * x;
    if (shift.size() > 0) y += shift;
    return y;
  }

  Vector resolve(const Vector& x) const {
    const Vector rhs = shift.size() > 0 ? Vector(x - shift) : x;
    Vector y = lu.solve(rhs);
    const Matrix iplusm = Matrix::Identity(m.rows(), m.cols()) + m;
    const double residual = (iplusm * y - rhs).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
    if (!(residual <= 1e-8 * scale)) {
      throw InternalConsistencyError(
          "resolvent solve failed; the monotonicity invariant must be broken");
    }
    return y;
  }
};

namespace {

std::shared_ptr<const MonotoneSource::Impl> make_source(MonotoneSource::Kind kind, Matrix m,
                                                        Vector shift,
                                                        std::optional<double> beta,
                                                        const CheckPolicy& policy) {
  require_finite(m, "monotone operator matrix");
  if (m.rows() != m.cols()) throw RejectedInputError("monotone operator matrix must be square");
  require_dim_valid(m.rows(), "monotone operator");
  if (shift.size() > 0) require_same_dim(shift.size(), m.rows(), "gradient shift");

  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    throw RejectedInputError("symmetric part must be PSD within 1e-10 (monotonicity)");
  }

  auto impl = std::make_shared<MonotoneSource::Impl>();
  impl->kind = kind;
  impl->m = std::move(m);
  impl->shift = std::move(shift);
  impl->beta = beta;
  impl->lu = Eigen::PartialPivLU<Matrix>(
      Matrix(Matrix::Identity(impl->m.rows(), impl->m.cols()) + impl->m));

  if (beta && policy.enabled) {
    if (!(*beta > 0.0)) throw RejectedInputError("cocoercivity constant must be positive");
    Sampler sampler(mix_seed(policy.seed, 0x5bcULL));
    const Eigen::Index d = impl->m.rows();
    for (int i = 0; i < policy.pairs; ++i) {
      const Vector x = sampler.with_norm(d, sampler.log_uniform(1e-2, 1e2));
      const Vector y = sampler.with_norm(d, sampler.log_uniform(1e-2, 1e2));
      const Vector dv = x - y;
      const Vector da = impl->apply(x) - impl->apply(y);
      if (dv.dot(da) < *beta * da.squaredNorm() - policy.slack) {
        throw RejectedInputError("asserted cocoercivity constant fails on a sampled pair");
      }
    }
  }
  return impl;
}

}  // namespace

MonotoneSource MonotoneSource::linear(Matrix m, std::optional<double> beta,
                                      const CheckPolicy& policy) {
  return MonotoneSource(make_source(Kind::linear, std::move(m), Vector(), beta, policy));
}

MonotoneSource MonotoneSource::quadratic_gradient(Matrix q, Vector shift,
                                                  std::optional<double> beta,
                                                  const CheckPolicy& policy) {
  require_finite(q, "quadratic hessian");
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw RejectedInputError("quadratic gradient requires a symmetric hessian");
  }
  return MonotoneSource(
      make_source(Kind::quadratic_gradient, std::move(q), std::move(shift), beta, policy));
}

MonotoneSource::Kind MonotoneSource::kind() const { return impl_->kind; }
Eigen::Index MonotoneSource::dim() const { return impl_->m.rows(); }

Vector MonotoneSource::apply(const Vector& x) const {
  require_same_dim(x.size(), dim(), "operator input");
  require_finite(x, "operator input");
  return impl_->apply(x);
}

Vector MonotoneSource::resolve(const Vector& x) const {
  require_same_dim(x.size(), dim(), "resolvent input");
  require_finite(x, "resolvent input");
  return impl_->resolve(x);
}

const Matrix& MonotoneSource::matrix() const { return impl_->m; }
const Vector& MonotoneSource::shift() const { return impl_->shift; }
std::optional<double> MonotoneSource::asserted_beta() const { return impl_->beta; }

bool MonotoneSource::symmetric(double tol) const {
  return (impl_->m - impl_->m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

Vector resolvent(const MonotoneSource& src, const Vector& x) { return src.resolve(x); }

Vector reflected_resolvent(const MonotoneSource& src, const Vector& x) {
  return 2.0 * src.resolve(x) - x;
}

Vector inverse_resolvent(const MonotoneSource& src, const Vector& x) {
  return x - src.resolve(x);
}

NonexpansiveMap NonexpansiveMap::reflected_resolvent_of(MonotoneSource src,
                                                        const CheckPolicy& policy) {
  const Eigen::Index d = src.dim();
  auto forward = [src](const Vector& x) { return reflected_resolvent(src, x); };
  check_nonexpansive_sampled("reflected resolvent", forward, d, policy);
  struct ReflectedImpl final : Impl {
    ReflectedImpl(MonotoneSource src) : src(std::move(src)) {}
    Vector eval(const Vector& x) const override { return reflected_resolvent(src, x); }
    Eigen::Index dim() const override { return src.dim(); }
    const char* kind_name() const override { return "reflected_resolvent"; }
    MonotoneSource src;
  };
  return NonexpansiveMap(std::make_shared<ReflectedImpl>(std::move(src)));
}

double cocoercivity_constant(const MonotoneSource& src, double zero_cap) {
  if (!(zero_cap > 0.0)) throw RejectedInputError("cocoercivity cap must be positive");
  if (!src.symmetric()) {
    throw UnsupportedRepresentationError(
        "cocoercivity certificates are computed only for symmetric representations");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(src.matrix(), Eigen::EigenvaluesOnly);
  const double lambda_max = eig.eigenvalues().maxCoeff();
  if (lambda_max <= 0.0) return zero_cap;
  return std::min(1.0 / lambda_max, zero_cap);
}

AveragedMap averaged_from_cocoercive(const MonotoneSource& src, double beta,
                                     const CheckPolicy& policy) {
  if (!(beta > 0.0)) throw RejectedInputError("cocoercivity constant must be positive");
  const double alpha = 1.0 / (1.0 + beta);
  const Eigen::Index d = src.dim();
  NonexpansiveMap part = NonexpansiveMap::extracted(
      [src](const Vector& x) { return reflected_resolvent(src, x); }, alpha, d, policy);
  return AveragedMap(alpha, std::move(part));
}

NonexpansiveMap nonexpansive_part(const AveragedMap& map, const CheckPolicy& policy) {
  return NonexpansiveMap::extracted([map](const Vector& x) { return map.eval(x); }, map.alpha(),
                                    map.dim(), policy);
}

AveragedMap compose(const std::vector<AveragedMap>& maps, const CheckPolicy& policy) {
  if (maps.size() < 2) throw RejectedInputError("compose requires at least two maps");
  const Eigen::Index d = maps.front().dim();
  std::vector<double> alphas;
  alphas.reserve(maps.size());
  for (const AveragedMap& m : maps) {
    require_same_dim(m.dim(), d, "composition factor");
    alphas.push_back(m.alpha());
  }
  const double alpha_star = rates::star_many(alphas);
  auto sequential = [maps](const Vector& x) {
    Vector y = x;
    for (const AveragedMap& m : maps) y = m.eval(y);
    return y;
  };
  NonexpansiveMap part = NonexpansiveMap::extracted(sequential, alpha_star, d, policy);
  return AveragedMap(alpha_star, std::move(part));
}

}  // namespace areg

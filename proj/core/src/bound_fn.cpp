#include "areg/bound_fn.hpp"

#include <map>
#include <mutex>
#include <string>

#include "areg/errors.hpp"

namespace areg {

struct BoundFn::Impl {
  Form form;

  // constant / inverse_power parameters
  double c0 = 0.0;
  double c = 0.0;
  double k = 0.0;

  // step_table knots (eps_i strictly increasing, v_i positive nonincreasing)
  std::vector<std::pair<double, double>> knots;

  // pointwise_max children
  std::shared_ptr<const Impl> left;
  std::shared_ptr<const Impl> right;

  // functional form, with a per-object evaluation cache
  Fn fn;
  mutable std::mutex memo_mutex;
  mutable std::map<std::string, BoundReal> memo;

  BoundReal eval(const BoundReal& eps, unsigned prec) const;
};

namespace {

BoundReal eval_step_table(const std::vector<std::pair<double, double>>& knots,
                          const BoundReal& eps, unsigned prec) {
  // The table value is nonincreasing in eps, so the enclosure endpoints are
  // the values at the endpoints of eps, swapped.
  auto value_at = [&](const MpReal& point) -> double {
    const MpReal first(knots.front().first, prec);
    if (point < first) {
      throw BoundFnRangeError("step table evaluated below its first knot (eps < " +
                              std::to_string(knots.front().first) + ")");
    }
    double v = knots.front().second;
    for (const auto& [e, val] : knots) {
      if (MpReal(e, prec) <= point) v = val;
    }
    return v;
  };
  const double at_hi = value_at(eps.hi());
  const double at_lo = value_at(eps.lo());
  return BoundReal(MpReal(at_hi, prec), MpReal(at_lo, prec));
}

}  // namespace

BoundReal BoundFn::Impl::eval(const BoundReal& eps, unsigned prec) const {
  if (!eps.strictly_positive()) {
    throw RejectedInputError("bound function argument must be strictly positive");
  }
  switch (form) {
    case Form::constant:
      return BoundReal::exact(c0, prec);
    case Form::inverse_power: {
      const BoundReal power = BoundReal::pow(eps, -k);
      return BoundReal::exact(c0, prec) + BoundReal::exact(c, prec) * power;
    }
    case Form::step_table:
      return eval_step_table(knots, eps, prec);
    case Form::pointwise_max:
      return BoundReal::max(left->eval(eps, prec), right->eval(eps, prec));
    case Form::functional: {
      const std::string key = eps.key() + "@" + std::to_string(prec);
      {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
      }
      BoundReal value = fn(eps, prec);
      std::lock_guard<std::mutex> lock(memo_mutex);
      memo.emplace(key, value);
      return value;
    }
  }
  throw InternalConsistencyError("unreachable bound function form");
}

BoundFn BoundFn::constant(double c) {
  if (!(c > 0.0)) throw RejectedInputError("constant bound function requires c > 0");
  auto impl = std::make_shared<Impl>();
  impl->form = Form::constant;
  impl->c0 = c;
  return BoundFn(std::move(impl));
}

BoundFn BoundFn::inverse_power(double c0, double c, double k) {
  if (!(c0 > 0.0) || !(c > 0.0) || !(k >= 0.0)) {
    throw RejectedInputError("inverse_power requires c0 > 0, c > 0, k >= 0");
  }
  auto impl = std::make_shared<Impl>();
  impl->form = Form::inverse_power;
  impl->c0 = c0;
  impl->c = c;
  impl->k = k;
  return BoundFn(std::move(impl));
}

BoundFn BoundFn::step_table(std::vector<std::pair<double, double>> knots) {
  if (knots.empty()) throw RejectedInputError("step table requires at least one knot");
  for (size_t i = 0; i < knots.size(); ++i) {
    if (!(knots[i].first > 0.0) || !(knots[i].second > 0.0)) {
      throw RejectedInputError("step table knots must be positive");
    }
    if (i > 0 && !(knots[i].first > knots[i - 1].first)) {
      throw RejectedInputError("step table eps values must be strictly increasing");
    }
    if (i > 0 && knots[i].second > knots[i - 1].second) {
      throw RejectedInputError("step table values must be nonincreasing in eps");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->form = Form::step_table;
  impl->knots = std::move(knots);
  return BoundFn(std::move(impl));
}

BoundFn BoundFn::pointwise_max(BoundFn a, BoundFn b) {
  auto impl = std::make_shared<Impl>();
  impl->form = Form::pointwise_max;
  impl->left = std::move(a.impl_);
  impl->right = std::move(b.impl_);
  return BoundFn(std::move(impl));
}

BoundFn BoundFn::functional(Fn fn) {
  if (!fn) throw RejectedInputError("functional bound requires a callable");
  auto impl = std::make_shared<Impl>();
  impl->form = Form::functional;
  impl->fn = std::move(fn);
  return BoundFn(std::move(impl));
}

BoundReal BoundFn::eval(const BoundReal& eps, unsigned prec) const {
  return impl_->eval(eps, prec);
}

RateValue BoundFn::operator()(double eps, unsigned prec) const {
  BoundReal e = BoundReal::exact(eps, prec);
  return RateValue{eval(e, prec).hi(), prec};
}

BoundFn::Form BoundFn::form() const { return impl_->form; }

double BoundFn::constant_value() const {
  if (impl_->form != Form::constant) throw InternalConsistencyError("not a constant bound");
  return impl_->c0;
}

double BoundFn::c0() const { return impl_->c0; }
double BoundFn::c() const { return impl_->c; }
double BoundFn::k() const { return impl_->k; }

const std::vector<std::pair<double, double>>& BoundFn::knots() const {
  if (impl_->form != Form::step_table) throw InternalConsistencyError("not a step table");
  return impl_->knots;
}

}  // namespace areg

#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "areg/bound_real.hpp"

namespace areg {

/// A positive, nonincreasing function (0,inf) -> (0,inf) used for
/// approximate-fixed-point bounds.  Closed forms (constant, inverse power,
/// step table) are serializable; pointwise-max and functional forms are
/// derived internally by the recursive rate evaluation and memoize their
/// evaluations.
class BoundFn {
 public:
  enum class Form { constant, inverse_power, step_table, pointwise_max, functional };

  static BoundFn constant(double c);

  /// eps -> c0 + c * eps^(-k), with c0, c > 0 and k >= 0.
  static BoundFn inverse_power(double c0, double c, double k);

  /// Right-continuous step function: at eps returns v_i of the largest
  /// eps_i <= eps; evaluation below the first knot is an error.
  static BoundFn step_table(std::vector<std::pair<double, double>> knots);

  static BoundFn pointwise_max(BoundFn a, BoundFn b);

  using Fn = std::function<BoundReal(const BoundReal&, unsigned)>;
  static BoundFn functional(Fn fn);

  /// Certified enclosure of the function value over the enclosure `eps`.
  BoundReal eval(const BoundReal& eps, unsigned prec) const;

  RateValue operator()(double eps, unsigned prec = 256) const;

  Form form() const;

  // Descriptor accessors for the serializable forms.
  double constant_value() const;
  double c0() const;
  double c() const;
  double k() const;
  const std::vector<std::pair<double, double>>& knots() const;

 private:
  struct Impl;
  explicit BoundFn(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace areg

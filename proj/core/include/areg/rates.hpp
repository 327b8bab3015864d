#pragma once

#include <span>
#include <vector>

#include "areg/bound_fn.hpp"
#include "areg/bound_real.hpp"

namespace areg::rates {

inline constexpr unsigned kDefaultPrecision = 256;

using Rational = mpq_class;

/// Parameter combinator for compositions of averaged maps:
/// star(a, b) = 1 / (1 + 1 / (a/(1-a) + b/(1-b))), exact over rationals.
Rational star(const Rational& a, const Rational& b);

/// Closed-form m-fold star: 1 / (1 + 1 / sum_i a_i/(1-a_i)); agrees exactly
/// with any parenthesized fold of star.
Rational star_many(std::span<const Rational> alphas);

/// Double convenience overloads; arguments convert to rationals exactly and
/// the exact result is rounded to nearest once.
double star(double a, double b);
double star_many(std::span<const double> alphas);
double star_many(const std::vector<double>& alphas);

// --- certified rate formulas -----------------------------------------------
//
// Each public function returns a RateValue whose `upper` field dominates the
// true real value of the expression; intermediate arithmetic runs in
// two-sided enclosures at `prec` bits.  The *_enclosure variants expose both
// endpoints for callers that need certified underestimates as well.

/// Rectangularity bound for a beta-cocoercive operator:
/// theta = (L1+L2) * (L3 + rho) with
/// rho = (L1+L2+2 beta L3 + sqrt(L1^2+L2^2+2 L1 L2+8 beta L1 L3+4 beta L2 L3)) / (2 beta).
RateValue theta(double beta, double l1, double l2, double l3,
                unsigned prec = kDefaultPrecision);
BoundReal theta_enclosure(const BoundReal& beta, const BoundReal& l1, const BoundReal& l2,
                          const BoundReal& l3);

/// b_bound = sqrt((K(delta/4)+delta/8)^2 + 2 theta(1/alpha2-1, kv, kv, delta/8))
/// with kv = K(delta/4)+delta/8.
RateValue b_bound(double alpha2, const BoundFn& K, double delta,
                  unsigned prec = kDefaultPrecision);
BoundReal b_bound_enclosure(const BoundReal& alpha2, const BoundFn& K, const BoundReal& delta,
                            unsigned prec);

/// Norm bound on a delta-approximate fixed point of the composition of two
/// averaged maps:
/// phi = B * max(sqrt(2), 4B/delta) / (1-alpha1) + alpha1/(1-alpha1)*kv + delta/8.
RateValue phi(double alpha1, double alpha2, const BoundFn& K, double delta,
              unsigned prec = kDefaultPrecision);
BoundReal phi_enclosure(const BoundReal& alpha1, const BoundReal& alpha2, const BoundFn& K,
                        const BoundReal& delta, unsigned prec);

/// m-fold extension of phi by recursion:
/// psi(2, {a1,a2}, K, delta) = phi(a1, a2, K, delta);
/// psi(m+1, {a_i}, K, delta) =
///   phi(a1*...*a_m, a_{m+1}, rho -> max(psi(m, {a_i}, K, rho), K(rho)), delta).
RateValue psi(int m, const std::vector<double>& alphas, const BoundFn& K, double delta,
              unsigned prec = kDefaultPrecision);
BoundReal psi_enclosure(std::span<const Rational> alphas, const BoundFn& K,
                        const BoundReal& delta, unsigned prec);

/// Strong-nonexpansiveness modulus of an alpha-averaged map:
/// omega_alpha(b, eps) = alpha (1-alpha) eps^2 / (4 b).
RateValue omega(double alpha, double b, double eps, unsigned prec = kDefaultPrecision);
BoundReal omega_enclosure(const Rational& alpha, const BoundReal& b, const BoundReal& eps,
                          unsigned prec);

/// Two-argument strong-nonexpansiveness modulus descriptor.  The averaged
/// form carries its exact averagedness parameter; the eps-identity form
/// (omega(b, eps) = eps) exists for harness self-tests.
class SneModulus {
 public:
  static SneModulus averaged(const Rational& alpha);
  static SneModulus averaged(double alpha);
  static SneModulus eps_identity();

  BoundReal eval(const BoundReal& b, const BoundReal& eps, unsigned prec) const;
  /// Exact rational evaluation; both forms are rational functions.
  Rational eval_exact(const Rational& b, const Rational& eps) const;
  bool is_averaged() const { return averaged_; }
  const Rational& alpha() const;

 private:
  SneModulus(bool averaged, Rational alpha) : averaged_(averaged), alpha_(std::move(alpha)) {}
  bool averaged_;
  Rational alpha_;
};

/// Iteration index after which every displacement of the Picard iteration is
/// guaranteed below eps:
/// varphi = ceil((18 b + 12 afp(eps/6))/eps - 1)
///        * ceil(d / omega(d, eps^2 / (27 b + 18 afp(eps/6)))).
/// A nonpositive first factor yields 0.  Ceilings are exact integers taken on
/// upper endpoints.
RateIndex varphi(double eps, double b, double d, const BoundFn& afp, const SneModulus& modulus,
                 unsigned prec = kDefaultPrecision);

/// Rate of asymptotic regularity for the composition of m averaged maps:
/// sigma(eps) = varphi(eps, b, d, delta -> psi(m, alphas, K, delta),
///                     omega_{alpha_1 * ... * alpha_m}).
RateIndex sigma(int m, const std::vector<double>& alphas, const BoundFn& K, double b, double d,
                double eps, unsigned prec = kDefaultPrecision);

}  // namespace areg::rates

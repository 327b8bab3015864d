#include "areg/rates.hpp"

#include <utility>

#include "areg/errors.hpp"

namespace areg::rates {

namespace {

void require_open_unit(const Rational& a, const char* what) {
  if (!(a > 0 && a < 1)) {
    throw RejectedInputError(std::string(what) + " must lie strictly inside (0,1)");
  }
}

void require_open_unit(double a, const char* what) {
  if (!(a > 0.0 && a < 1.0)) {
    throw RejectedInputError(std::string(what) + " must lie strictly inside (0,1)");
  }
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    throw RejectedInputError(std::string(what) + " must be strictly positive");
  }
}

std::vector<Rational> to_rationals(const std::vector<double>& alphas) {
  std::vector<Rational> out;
  out.reserve(alphas.size());
  for (double a : alphas) {
    require_open_unit(a, "averagedness parameter");
    out.emplace_back(a);  // exact dyadic conversion
  }
  return out;
}

double rational_to_double(const Rational& q) {
  return MpReal::from_rational(q, 53, MPFR_RNDN).to_double();
}

}  // namespace

Rational star(const Rational& a, const Rational& b) {
  require_open_unit(a, "star argument");
  require_open_unit(b, "star argument");
  const Rational s = a / (1 - a) + b / (1 - b);
  return Rational(1) / (1 + Rational(1) / s);
}

Rational star_many(std::span<const Rational> alphas) {
  if (alphas.size() < 2) throw RejectedInputError("star_many requires at least two parameters");
  Rational s = 0;
  for (const Rational& a : alphas) {
    require_open_unit(a, "star_many argument");
    s += a / (1 - a);
  }
  return Rational(1) / (1 + Rational(1) / s);
}

double star(double a, double b) { return rational_to_double(star(Rational(a), Rational(b))); }

double star_many(std::span<const double> alphas) {
  std::vector<Rational> rs;
  rs.reserve(alphas.size());
  for (double a : alphas) {
    require_open_unit(a, "star_many argument");
    rs.emplace_back(a);
  }
  return rational_to_double(star_many(std::span<const Rational>(rs)));
}

double star_many(const std::vector<double>& alphas) {
  return star_many(std::span<const double>(alphas));
}

BoundReal theta_enclosure(const BoundReal& beta, const BoundReal& l1, const BoundReal& l2,
                          const BoundReal& l3) {
  const unsigned prec = beta.prec();
  const BoundReal two = BoundReal::exact(2L, prec);
  const BoundReal sum12 = l1 + l2;
  const BoundReal disc = l1 * l1 + l2 * l2 + two * l1 * l2 +
                         BoundReal::exact(8L, prec) * beta * l1 * l3 +
                         BoundReal::exact(4L, prec) * beta * l2 * l3;
  const BoundReal rho = (sum12 + two * beta * l3 + BoundReal::sqrt(disc)) / (two * beta);
  return sum12 * (l3 + rho);
}

RateValue theta(double beta, double l1, double l2, double l3, unsigned prec) {
  require_positive(beta, "beta");
  require_positive(l1, "L1");
  require_positive(l2, "L2");
  require_positive(l3, "L3");
  const BoundReal v =
      theta_enclosure(BoundReal::exact(beta, prec), BoundReal::exact(l1, prec),
                      BoundReal::exact(l2, prec), BoundReal::exact(l3, prec));
  return RateValue{v.hi(), prec};
}

namespace {

// sqrt(kv^2 + 2 theta(1/alpha2 - 1, kv, kv, delta/8)); kv is evaluated by the
// caller so phi can reuse it.
BoundReal b_from_kv(const BoundReal& alpha2, const BoundReal& kv, const BoundReal& delta,
                    unsigned prec) {
  const BoundReal one = BoundReal::exact(1L, prec);
  const BoundReal beta = one / alpha2 - one;
  const BoundReal th = theta_enclosure(beta, kv, kv, delta / BoundReal::exact(8L, prec));
  return BoundReal::sqrt(kv * kv + BoundReal::exact(2L, prec) * th);
}

BoundReal kv_of(const BoundFn& K, const BoundReal& delta, unsigned prec) {
  return K.eval(delta / BoundReal::exact(4L, prec), prec) + delta / BoundReal::exact(8L, prec);
}

}  // namespace

BoundReal b_bound_enclosure(const BoundReal& alpha2, const BoundFn& K, const BoundReal& delta,
                            unsigned prec) {
  return b_from_kv(alpha2, kv_of(K, delta, prec), delta, prec);
}

RateValue b_bound(double alpha2, const BoundFn& K, double delta, unsigned prec) {
  require_open_unit(alpha2, "alpha2");
  require_positive(delta, "delta");
  const BoundReal v = b_bound_enclosure(BoundReal::exact(alpha2, prec), K,
                                        BoundReal::exact(delta, prec), prec);
  return RateValue{v.hi(), prec};
}

BoundReal phi_enclosure(const BoundReal& alpha1, const BoundReal& alpha2, const BoundFn& K,
                        const BoundReal& delta, unsigned prec) {
  const BoundReal one = BoundReal::exact(1L, prec);
  const BoundReal kv = kv_of(K, delta, prec);
  const BoundReal b = b_from_kv(alpha2, kv, delta, prec);
  const BoundReal one_minus_a1 = one - alpha1;
  const BoundReal scale =
      BoundReal::max(BoundReal::sqrt(BoundReal::exact(2L, prec)),
                     BoundReal::exact(4L, prec) * b / delta);
  return b * scale / one_minus_a1 + (alpha1 / one_minus_a1) * kv +
         delta / BoundReal::exact(8L, prec);
}

RateValue phi(double alpha1, double alpha2, const BoundFn& K, double delta, unsigned prec) {
  require_open_unit(alpha1, "alpha1");
  require_open_unit(alpha2, "alpha2");
  require_positive(delta, "delta");
  const BoundReal v = phi_enclosure(BoundReal::exact(alpha1, prec),
                                    BoundReal::exact(alpha2, prec), K,
                                    BoundReal::exact(delta, prec), prec);
  return RateValue{v.hi(), prec};
}

BoundReal psi_enclosure(std::span<const Rational> alphas, const BoundFn& K,
                        const BoundReal& delta, unsigned prec) {
  const size_t m = alphas.size();
  if (m < 2) throw RejectedInputError("psi requires at least two averagedness parameters");
  for (const Rational& a : alphas) require_open_unit(a, "averagedness parameter");
  if (m == 2) {
    return phi_enclosure(BoundReal::of_rational(alphas[0], prec),
                         BoundReal::of_rational(alphas[1], prec), K, delta, prec);
  }
  const std::vector<Rational> prefix(alphas.begin(), alphas.end() - 1);
  const Rational prefix_star = star_many(std::span<const Rational>(prefix));
  BoundFn inner = BoundFn::pointwise_max(
      BoundFn::functional([prefix, K](const BoundReal& rho, unsigned p) {
        return psi_enclosure(std::span<const Rational>(prefix), K, rho, p);
      }),
      K);
  return phi_enclosure(BoundReal::of_rational(prefix_star, prec),
                       BoundReal::of_rational(alphas.back(), prec), inner, delta, prec);
}

RateValue psi(int m, const std::vector<double>& alphas, const BoundFn& K, double delta,
              unsigned prec) {
  if (m < 2) throw RejectedInputError("psi requires m >= 2");
  if (static_cast<size_t>(m) != alphas.size()) {
    throw RejectedInputError("psi parameter list length must equal m");
  }
  require_positive(delta, "delta");
  const std::vector<Rational> rs = to_rationals(alphas);
  const BoundReal v = psi_enclosure(std::span<const Rational>(rs), K,
                                    BoundReal::exact(delta, prec), prec);
  return RateValue{v.hi(), prec};
}

BoundReal omega_enclosure(const Rational& alpha, const BoundReal& b, const BoundReal& eps,
                          unsigned prec) {
  require_open_unit(alpha, "alpha");
  const BoundReal a = BoundReal::of_rational(alpha, prec);
  const BoundReal one = BoundReal::exact(1L, prec);
  return a * (one - a) / (BoundReal::exact(4L, prec) * b) * (eps * eps);
}

RateValue omega(double alpha, double b, double eps, unsigned prec) {
  require_open_unit(alpha, "alpha");
  require_positive(b, "b");
  require_positive(eps, "eps");
  const BoundReal v = omega_enclosure(Rational(alpha), BoundReal::exact(b, prec),
                                      BoundReal::exact(eps, prec), prec);
  return RateValue{v.hi(), prec};
}

SneModulus SneModulus::averaged(const Rational& alpha) {
  require_open_unit(alpha, "modulus alpha");
  return SneModulus(true, alpha);
}

SneModulus SneModulus::averaged(double alpha) { return averaged(Rational(alpha)); }

SneModulus SneModulus::eps_identity() { return SneModulus(false, Rational(0)); }

BoundReal SneModulus::eval(const BoundReal& b, const BoundReal& eps, unsigned prec) const {
  if (!averaged_) return eps;
  return omega_enclosure(alpha_, b, eps, prec);
}

Rational SneModulus::eval_exact(const Rational& b, const Rational& eps) const {
  if (!averaged_) return eps;
  return alpha_ * (1 - alpha_) / (4 * b) * eps * eps;
}

const Rational& SneModulus::alpha() const {
  if (!averaged_) throw InternalConsistencyError("eps-identity modulus has no alpha");
  return alpha_;
}

namespace {

mpz_class ceil_rational(const Rational& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

}  // namespace

RateIndex varphi(double eps, double b, double d, const BoundFn& afp, const SneModulus& modulus,
                 unsigned prec) {
  require_positive(eps, "eps");
  require_positive(b, "b");
  require_positive(d, "d");
  const BoundReal e = BoundReal::exact(eps, prec);
  const BoundReal afp6_enclosure = afp.eval(e / BoundReal::exact(6L, prec), prec);
  if (!afp6_enclosure.strictly_positive()) {
    throw RejectedInputError("approximate-fixed-point bound must be positive");
  }

  // Both factors are rational functions of their inputs (no square roots), so
  // past the afp evaluation the arithmetic is exact: take the certified upper
  // endpoint of afp(eps/6) as an exact dyadic rational and ceil exactly.
  // Enlarging afp and shrinking the modulus both keep the index a valid rate.
  const Rational eq(eps), bq(b), dq(d);
  const Rational afp6 = afp6_enclosure.hi().to_rational();

  const Rational factor1 = (18 * bq + 12 * afp6) / eq - 1;
  if (factor1 <= 0) return RateIndex{mpz_class(0)};
  const mpz_class n1 = ceil_rational(factor1);

  const Rational modulus_arg = eq * eq / (27 * bq + 18 * afp6);
  const Rational w = modulus.eval_exact(dq, modulus_arg);
  if (w <= 0) {
    throw InternalConsistencyError("strong-nonexpansiveness modulus collapsed to zero");
  }
  mpz_class n2 = ceil_rational(dq / w);
  if (n2 < 1) n2 = 1;
  return RateIndex{n1 * n2};
}

RateIndex sigma(int m, const std::vector<double>& alphas, const BoundFn& K, double b, double d,
                double eps, unsigned prec) {
  if (m < 2) throw RejectedInputError("sigma requires m >= 2");
  if (static_cast<size_t>(m) != alphas.size()) {
    throw RejectedInputError("sigma parameter list length must equal m");
  }
  const std::vector<Rational> rs = to_rationals(alphas);
  const Rational composed = star_many(std::span<const Rational>(rs));
  BoundFn afp = BoundFn::functional([rs, K](const BoundReal& delta, unsigned p) {
    return psi_enclosure(std::span<const Rational>(rs), K, delta, p);
  });
  return varphi(eps, b, d, afp, SneModulus::averaged(composed), prec);
}

}  // namespace areg::rates

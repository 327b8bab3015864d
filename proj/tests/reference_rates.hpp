#pragma once

// Straight-line reference evaluation of the rate formulas with to-nearest
// rounding at a caller-chosen precision.  This path deliberately shares no
// code with the library's enclosure arithmetic: the library's certified
// upper bounds must dominate these reference values when evaluated at higher
// precision.

#include <areg/mpreal.hpp>

#include <functional>
#include <vector>

namespace refrates {

using areg::MpReal;

using RefBoundFn = std::function<MpReal(const MpReal&, unsigned)>;

inline RefBoundFn ref_constant(double c) {
  return [c](const MpReal&, unsigned prec) { return MpReal(c, prec); };
}

inline MpReal theta(const MpReal& beta, const MpReal& l1, const MpReal& l2, const MpReal& l3,
                    unsigned prec) {
  const auto n = MPFR_RNDN;
  MpReal two(2L, prec), four(4L, prec), eight(8L, prec);
  MpReal sum12 = MpReal::add(l1, l2, n);
  MpReal disc = MpReal::add(
      MpReal::add(MpReal::mul(l1, l1, n), MpReal::mul(l2, l2, n), n),
      MpReal::add(MpReal::mul(two, MpReal::mul(l1, l2, n), n),
                  MpReal::add(MpReal::mul(eight, MpReal::mul(beta, MpReal::mul(l1, l3, n), n), n),
                              MpReal::mul(four, MpReal::mul(beta, MpReal::mul(l2, l3, n), n), n),
                              n),
                  n),
      n);
  MpReal rho = MpReal::div(
      MpReal::add(MpReal::add(sum12, MpReal::mul(two, MpReal::mul(beta, l3, n), n), n),
                  MpReal::sqrt(disc, n), n),
      MpReal::mul(two, beta, n), n);
  return MpReal::mul(sum12, MpReal::add(l3, rho, n), n);
}

inline MpReal b_bound(const MpReal& alpha2, const RefBoundFn& K, const MpReal& delta,
                      unsigned prec) {
  const auto n = MPFR_RNDN;
  MpReal one(1L, prec), two(2L, prec), four(4L, prec), eight(8L, prec);
  MpReal kv = MpReal::add(K(MpReal::div(delta, four, n), prec), MpReal::div(delta, eight, n), n);
  MpReal beta = MpReal::sub(MpReal::div(one, alpha2, n), one, n);
  MpReal th = theta(beta, kv, kv, MpReal::div(delta, eight, n), prec);
  return MpReal::sqrt(MpReal::add(MpReal::mul(kv, kv, n), MpReal::mul(two, th, n), n), n);
}

inline MpReal phi(const MpReal& alpha1, const MpReal& alpha2, const RefBoundFn& K,
                  const MpReal& delta, unsigned prec) {
  const auto n = MPFR_RNDN;
  MpReal one(1L, prec), two(2L, prec), four(4L, prec), eight(8L, prec);
  MpReal b = b_bound(alpha2, K, delta, prec);
  MpReal kv = MpReal::add(K(MpReal::div(delta, four, n), prec), MpReal::div(delta, eight, n), n);
  MpReal scale = MpReal::max(MpReal::sqrt(two, n), MpReal::div(MpReal::mul(four, b, n), delta, n));
  MpReal one_m = MpReal::sub(one, alpha1, n);
  return MpReal::add(
      MpReal::add(MpReal::div(MpReal::mul(b, scale, n), one_m, n),
                  MpReal::mul(MpReal::div(alpha1, one_m, n), kv, n), n),
      MpReal::div(delta, eight, n), n);
}

inline MpReal ref_star_many(const std::vector<double>& alphas, unsigned prec) {
  const auto n = MPFR_RNDN;
  MpReal one(1L, prec);
  MpReal s(0L, prec);
  for (double a : alphas) {
    MpReal av(a, prec);
    s = MpReal::add(s, MpReal::div(av, MpReal::sub(one, av, n), n), n);
  }
  return MpReal::div(one, MpReal::add(one, MpReal::div(one, s, n), n), n);
}

inline MpReal psi(const std::vector<double>& alphas, const RefBoundFn& K, const MpReal& delta,
                  unsigned prec) {
  if (alphas.size() == 2) {
    return phi(MpReal(alphas[0], prec), MpReal(alphas[1], prec), K, delta, prec);
  }
  std::vector<double> prefix(alphas.begin(), alphas.end() - 1);
  RefBoundFn inner = [prefix, K](const MpReal& rho, unsigned p) {
    return MpReal::max(psi(prefix, K, rho, p), K(rho, p));
  };
  return phi(ref_star_many(prefix, prec), MpReal(alphas.back(), prec), inner, delta, prec);
}

inline MpReal omega(double alpha, const MpReal& b, const MpReal& eps, unsigned prec) {
  const auto n = MPFR_RNDN;
  MpReal a(alpha, prec), one(1L, prec), four(4L, prec);
  return MpReal::mul(
      MpReal::div(MpReal::mul(a, MpReal::sub(one, a, n), n), MpReal::mul(four, b, n), n),
      MpReal::mul(eps, eps, n), n);
}

}  // namespace refrates

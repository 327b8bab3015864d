#pragma once

#include <algorithm>
#include <string>

#include "areg/mpreal.hpp"

namespace areg {

/// Two-sided enclosure [lo, hi] of a real number, maintained with outward
/// directed rounding.  The upper endpoint of any quantity derived through
/// this type is a guaranteed overestimate of the true real value; that upper
/// endpoint is what RateValue ultimately reports.
class BoundReal {
 public:
  BoundReal(MpReal lo, MpReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw InternalConsistencyError("enclosure has lo > hi");
  }

  static BoundReal exact(double v, unsigned prec) {
    return BoundReal(MpReal(v, prec), MpReal(v, prec));
  }

  static BoundReal exact(long v, unsigned prec) {
    return BoundReal(MpReal(v, prec), MpReal(v, prec));
  }

  static BoundReal of_rational(const mpq_class& q, unsigned prec) {
    return BoundReal(MpReal::from_rational(q, prec, MPFR_RNDD),
                     MpReal::from_rational(q, prec, MPFR_RNDU));
  }

  const MpReal& lo() const { return lo_; }
  const MpReal& hi() const { return hi_; }
  unsigned prec() const { return static_cast<unsigned>(std::max(lo_.prec(), hi_.prec())); }

  bool strictly_positive() const { return lo_.sign() > 0; }
  bool nonnegative() const { return lo_.sign() >= 0; }

  mpz_class ceil_hi() const { return hi_.ceil_to_mpz(); }

  friend BoundReal operator+(const BoundReal& a, const BoundReal& b) {
    return BoundReal(MpReal::add(a.lo_, b.lo_, MPFR_RNDD), MpReal::add(a.hi_, b.hi_, MPFR_RNDU));
  }

  friend BoundReal operator-(const BoundReal& a, const BoundReal& b) {
    return BoundReal(MpReal::sub(a.lo_, b.hi_, MPFR_RNDD), MpReal::sub(a.hi_, b.lo_, MPFR_RNDU));
  }

  friend BoundReal operator*(const BoundReal& a, const BoundReal& b) {
    const MpReal* xs[2] = {&a.lo_, &a.hi_};
    const MpReal* ys[2] = {&b.lo_, &b.hi_};
    MpReal lo = MpReal::mul(a.lo_, b.lo_, MPFR_RNDD);
    MpReal hi = MpReal::mul(a.lo_, b.lo_, MPFR_RNDU);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (i == 0 && j == 0) continue;
        lo = MpReal::min(lo, MpReal::mul(*xs[i], *ys[j], MPFR_RNDD));
        hi = MpReal::max(hi, MpReal::mul(*xs[i], *ys[j], MPFR_RNDU));
      }
    }
    return BoundReal(std::move(lo), std::move(hi));
  }

  friend BoundReal operator/(const BoundReal& a, const BoundReal& b) {
    if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0) {
      throw InternalConsistencyError("division by an enclosure containing zero");
    }
    const MpReal* xs[2] = {&a.lo_, &a.hi_};
    const MpReal* ys[2] = {&b.lo_, &b.hi_};
    MpReal lo = MpReal::div(a.lo_, b.lo_, MPFR_RNDD);
    MpReal hi = MpReal::div(a.lo_, b.lo_, MPFR_RNDU);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (i == 0 && j == 0) continue;
        lo = MpReal::min(lo, MpReal::div(*xs[i], *ys[j], MPFR_RNDD));
        hi = MpReal::max(hi, MpReal::div(*xs[i], *ys[j], MPFR_RNDU));
      }
    }
    return BoundReal(std::move(lo), std::move(hi));
  }

  static BoundReal sqrt(const BoundReal& a) {
    if (a.hi_.sign() < 0) throw InternalConsistencyError("sqrt of a negative enclosure");
    MpReal lo = a.lo_.sign() < 0 ? MpReal(0L, a.lo_.prec()) : MpReal::sqrt(a.lo_, MPFR_RNDD);
    return BoundReal(std::move(lo), MpReal::sqrt(a.hi_, MPFR_RNDU));
  }

  /// base^expo for a strictly positive base and an exact real exponent.
  static BoundReal pow(const BoundReal& base, double expo) {
    if (!base.strictly_positive()) {
      throw RejectedInputError("pow requires a strictly positive base enclosure");
    }
    MpReal e(expo, std::max<mpfr_prec_t>(base.lo_.prec(), 64));
    if (expo >= 0) {
      return BoundReal(MpReal::pow(base.lo_, e, MPFR_RNDD), MpReal::pow(base.hi_, e, MPFR_RNDU));
    }
    return BoundReal(MpReal::pow(base.hi_, e, MPFR_RNDD), MpReal::pow(base.lo_, e, MPFR_RNDU));
  }

  static BoundReal max(const BoundReal& a, const BoundReal& b) {
    return BoundReal(MpReal::max(a.lo_, b.lo_), MpReal::max(a.hi_, b.hi_));
  }

  static BoundReal min(const BoundReal& a, const BoundReal& b) {
    return BoundReal(MpReal::min(a.lo_, b.lo_), MpReal::min(a.hi_, b.hi_));
  }

  std::string key() const { return lo_.hex() + "|" + hi_.hex(); }

 private:
  MpReal lo_;
  MpReal hi_;
};

/// A certified upper bound of a nonnegative real rate quantity.
struct RateValue {
  MpReal upper;
  unsigned precision_bits;

  double upper_double() const { return upper.to_double(MPFR_RNDU); }
  std::string str(int significant_digits = 20) const { return upper.str(significant_digits); }
};

/// An exact natural number rate index; never saturated or truncated.
struct RateIndex {
  mpz_class value;

  std::string str() const { return value.get_str(); }
  double approx() const { return value.get_d(); }

  friend bool operator==(const RateIndex& a, const RateIndex& b) { return a.value == b.value; }
};

}  // namespace areg

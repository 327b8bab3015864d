#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "areg/errors.hpp"

namespace areg {

/// Thin RAII wrapper over mpfr_t.  Every arithmetic helper takes an explicit
/// rounding mode; the precision of a result is the larger operand precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = 256) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  MpReal(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);  // exact whenever prec >= 53
  }

  MpReal(long n, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, n, MPFR_RNDN);
  }

  static MpReal from_rational(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    MpReal r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
  }

  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  MpReal& operator=(MpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~MpReal() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }

  bool finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

  /// Exact ceiling as an arbitrary-precision integer.
  mpz_class ceil_to_mpz() const {
    if (!finite()) throw InternalConsistencyError("ceil of non-finite value");
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
    return z;
  }

  /// Exact conversion: every finite value is a dyadic rational.
  mpq_class to_rational() const {
    if (!finite()) throw InternalConsistencyError("rational conversion of non-finite value");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  std::string str(int significant_digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", significant_digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  /// Exact hex dump; usable as a deterministic cache key.
  std::string hex() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  int compare(const MpReal& o) const { return mpfr_cmp(v_, o.v_); }
  friend bool operator<(const MpReal& a, const MpReal& b) { return a.compare(b) < 0; }
  friend bool operator<=(const MpReal& a, const MpReal& b) { return a.compare(b) <= 0; }
  friend bool operator>(const MpReal& a, const MpReal& b) { return a.compare(b) > 0; }
  friend bool operator>=(const MpReal& a, const MpReal& b) { return a.compare(b) >= 0; }
  friend bool operator==(const MpReal& a, const MpReal& b) { return a.compare(b) == 0; }

  static MpReal add(const MpReal& a, const MpReal& b, mpfr_rnd_t rnd) {
    MpReal r(result_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, rnd);
    return r;
  }

  static MpReal sub(const MpReal& a, const MpReal& b, mpfr_rnd_t rnd) {
    MpReal r(result_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, rnd);
    return r;
  }

  static MpReal mul(const MpReal& a, const MpReal& b, mpfr_rnd_t rnd) {
    MpReal r(result_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, rnd);
    return r;
  }

  static MpReal div(const MpReal& a, const MpReal& b, mpfr_rnd_t rnd) {
    if (b.sign() == 0) throw InternalConsistencyError("division by zero");
    MpReal r(result_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, rnd);
    return r;
  }

  static MpReal sqrt(const MpReal& a, mpfr_rnd_t rnd) {
    if (a.sign() < 0) throw InternalConsistencyError("sqrt of negative value");
    MpReal r(a.prec());
    mpfr_sqrt(r.v_, a.v_, rnd);
    return r;
  }

  static MpReal pow(const MpReal& a, const MpReal& b, mpfr_rnd_t rnd) {
    MpReal r(result_prec(a, b));
    mpfr_pow(r.v_, a.v_, b.v_, rnd);
    return r;
  }

  static MpReal neg(const MpReal& a) {
    MpReal r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);  // exact
    return r;
  }

  static MpReal min(const MpReal& a, const MpReal& b) { return a <= b ? a : b; }
  static MpReal max(const MpReal& a, const MpReal& b) { return a >= b ? a : b; }

 private:
  static mpfr_prec_t result_prec(const MpReal& a, const MpReal& b) {
    return std::max(a.prec(), b.prec());
  }

  mpfr_t v_;
};

}  // namespace areg

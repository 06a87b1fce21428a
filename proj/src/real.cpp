#include "torcoh/real.hpp"

#include <cmath>
#include <cstdlib>

namespace torcoh {

Caps& default_caps() {
  static Caps caps = [] {
    Caps c;
    if (const char* p = std::getenv("TORCOH_PRECISION")) {
      char* end = nullptr;
      long d = std::strtol(p, &end, 10);
      if (end && *end == '\0' && d >= 10 && d <= 10000) c.precision_digits = static_cast<int>(d);
    }
    return c;
  }();
  return caps;
}

mpfr_prec_t Real::prec_bits(int digits) {
  if (digits < 2) digits = 2;
  // digits * log2(10), plus guard bits so the last printed digit is stable.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

Real::Real(int digits) : digits_(digits) {
  mpfr_init2(v_, prec_bits(digits));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(int digits) {
  Real r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::of(const Int& v, int digits) {
  Real r(digits);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const Rat& v, int digits) {
  Real r(digits);
  mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of(long v, int digits) {
  Real r(digits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& s, int digits) {
  Real r(digits);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    fail(Errc::parse, "not a decimal real: '" + s + "'");
  return r;
}

static int max_digits(const Real& a, const Real& b) {
  return a.digits() > b.digits() ? a.digits() : b.digits();
}

#define TORCOH_REAL_BINOP(op, fn)                     \
  Real Real::operator op(const Real& o) const {      \
    Real r(max_digits(*this, o));                    \
    fn(r.v_, v_, o.v_, MPFR_RNDN);                   \
    return r;                                        \
  }

TORCOH_REAL_BINOP(+, mpfr_add)
TORCOH_REAL_BINOP(-, mpfr_sub)
TORCOH_REAL_BINOP(*, mpfr_mul)
TORCOH_REAL_BINOP(/, mpfr_div)
#undef TORCOH_REAL_BINOP

Real Real::operator-() const {
  Real r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(digits_);
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::ln() const {
  if (sign() <= 0) fail(Errc::validate, "log of a non-positive value");
  Real r(digits_);
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  if (sign() < 0) fail(Errc::validate, "square root of a negative value");
  Real r(digits_);
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::pow_int(long e) const {
  Real r(digits_);
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

std::string Real::str(int sig_digits) const {
  if (sig_digits < 1) sig_digits = 1;
  char* buf = nullptr;
  // %Rg prints sig_digits significant digits, trimming trailing zeros, and is
  // locale-independent; this keeps serialized reals byte-stable across runs.
  mpfr_asprintf(&buf, "%.*Rg", sig_digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace torcoh

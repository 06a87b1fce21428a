#pragma once

#include <mpfr.h>

#include <string>

#include "torcoh/numbers.hpp"

namespace torcoh {

// Thin RAII wrapper over mpfr_t at a fixed decimal precision. All real-valued
// outputs of the library flow through this type so that printed digits are
// reproducible; doubles never appear in results.
class Real {
 public:
  explicit Real(int digits = default_caps().precision_digits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real pi(int digits = default_caps().precision_digits);
  static Real of(const Int& v, int digits = default_caps().precision_digits);
  static Real of(const Rat& v, int digits = default_caps().precision_digits);
  static Real of(long v, int digits = default_caps().precision_digits);
  // Parses a decimal literal exactly as mpfr_set_str does; fails on garbage.
  static Real parse(const std::string& s, int digits = default_caps().precision_digits);

  int digits() const { return digits_; }

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;

  Real abs() const;
  Real ln() const;     // fails (validate) on non-positive argument
  Real sqrt() const;   // fails (validate) on negative argument
  Real pow_int(long e) const;

  int sign() const { return mpfr_sgn(v_); }
  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Shortest-faithful style decimal with sig_digits significant digits.
  std::string str(int sig_digits) const;
  std::string str() const { return str(digits_); }

 private:
  static mpfr_prec_t prec_bits(int digits);
  mpfr_t v_;
  int digits_;
};

}  // namespace torcoh

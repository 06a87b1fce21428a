#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "torcoh/caps.hpp"

namespace torcoh {

using Int = mpz_class;
using Rat = mpq_class;

inline std::size_t bit_length(const Int& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

inline void check_entry_bits(const Int& v, const Caps& caps) {
  if (bit_length(v) > caps.max_entry_bits)
    fail(Errc::capacity, "integer entry exceeds cap of " + std::to_string(caps.max_entry_bits) +
                             " bits; raise the cap or shrink the input");
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = x*a + y*b with |g| = gcd(a,b), g >= 0.
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Floor quotient; remainder a - q*b lies in [0, |b|).
inline Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Exact division; aborts (GMP) if not divisible, so callers must guarantee it.
inline Int divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divisible(const Int& a, const Int& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int abs(const Int& v) {
  Int r;
  mpz_abs(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    fail(Errc::parse, "not a base-10 integer: '" + s + "'");
  return v;
}

inline Rat parse_rat(const std::string& s) {
  Rat v;
  if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    fail(Errc::parse, "not a rational n or n/d in base 10: '" + s + "'");
  v.canonicalize();
  return v;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

// True square test; sets root when exact.
inline bool perfect_square(const Int& v, Int& root) {
  if (v < 0) return false;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return true;
}

}  // namespace torcoh

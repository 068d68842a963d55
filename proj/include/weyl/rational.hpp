#pragma once

#include <gmpxx.h>

#include <string>

namespace weyl {

// Exact arithmetic over the rationals. All coefficients in the library are
// kept in canonical reduced form (mpq_class canonicalizes on construction
// from integers; products/sums of canonical values stay canonical).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// C(a, b), zero outside the triangle (a < 0, b < 0 or b > a).
inline Integer binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

inline Integer factorial(long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace weyl

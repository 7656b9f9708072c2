#ifndef QG_BIGINT_HPP
#define QG_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace qg {

// All counts in this library are exact. 21! already overflows a 64-bit
// word and the census sums reach thousands of bits, so every quantity
// that can grow with the order lives in an arbitrary-precision integer.
using Int = mpz_class;

inline Int factorial(unsigned long m) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace qg

#endif  // QG_BIGINT_HPP

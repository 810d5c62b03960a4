#ifndef BRAIDWO_BIGNAT_HPP
#define BRAIDWO_BIGNAT_HPP

#include <gmpxx.h>

#include <string>

namespace braidwo {

// Exact unbounded naturals. Everything that can grow past a machine word
// (step indices, exponent entries, Hardy values) goes through this type.
using BigNat = mpz_class;

inline BigNat pow2(unsigned long e) {
  BigNat r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// Number of binary digits; 0 for 0.
inline unsigned long bit_length(const BigNat& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// floor(log2 x) + 1, with log 0 = 0.  Equals the bit length.
inline unsigned long ilog2p1(const BigNat& x) { return bit_length(x); }

// Exact floor k-th root, k >= 1.
inline BigNat iroot(const BigNat& x, unsigned long k) {
  BigNat r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

inline BigNat isqrt(const BigNat& x) { return iroot(x, 2); }

inline BigNat binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigNat r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Compact digest for astronomically large values: leading digits plus
// decimal digit count and bit length, e.g. "1.2039e+350 (1165 bits)".
std::string sci_digest(const BigNat& x);

// Full decimal unless more than `cut` digits, then the digest.
std::string show(const BigNat& x, std::size_t cut = 64);

}  // namespace braidwo

#endif

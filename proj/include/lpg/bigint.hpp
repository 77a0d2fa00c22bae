#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpg {

using BigInt = mpz_class;
using BigVector = std::vector<BigInt>;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

// Floor quotient, so that a - q*b lies in [0, |b|) for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::int64_t to_int64(const BigInt& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return x.get_si();
}

}  // namespace lpg

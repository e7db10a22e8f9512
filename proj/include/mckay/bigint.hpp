#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mckay {

/// Arbitrary-precision integer used for group orders and character degrees.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::vector<std::string> to_decimal(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

}  // namespace mckay

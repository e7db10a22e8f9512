#include "mckay/prime.hpp"

#include <stdexcept>
#include <string>

namespace mckay {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("prime_divisors: nonpositive argument");
  std::vector<std::uint64_t> out;
  BigInt rest = n;
  for (std::uint64_t d = 2; rest > 1; ++d) {
    if (BigInt(d) * d > rest) {
      // rest is prime here; group orders we handle never have huge prime factors
      if (!rest.fits_ulong_p()) throw std::domain_error("prime_divisors: cofactor too large");
      out.push_back(rest.get_ui());
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      out.push_back(d);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) rest /= d;
    }
  }
  return out;
}

BigInt p_part(const BigInt& n, std::uint64_t p) {
  BigInt rest = n;
  BigInt part = 1;
  while (rest != 0 && mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    rest /= p;
    part *= p;
  }
  return part;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) throw std::invalid_argument(std::to_string(value) + " is not prime");
}

bool Prime::divides(const BigInt& n) const {
  return mpz_divisible_ui_p(n.get_mpz_t(), value_) != 0;
}

}  // namespace mckay

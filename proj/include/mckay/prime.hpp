#pragma once

#include <cstdint>
#include <vector>

#include "mckay/bigint.hpp"

namespace mckay {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(const BigInt& n);

/// p-part of n: the largest power of p dividing n.
BigInt p_part(const BigInt& n, std::uint64_t p);

/// A rational prime. Construction rejects composites.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  bool divides(const BigInt& n) const;

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  std::uint64_t value_;
};

}  // namespace mckay

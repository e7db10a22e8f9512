#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/element_table.hpp"
#include "mckay/prime.hpp"

namespace mckay {

/// Multiset of irreducible character degrees, sorted ascending.
struct DegreeMultiset {
  std::vector<BigInt> degrees;
  BigInt group_order;

  BigInt sum_of_squares() const;
  std::size_t count_of(const BigInt& d) const;
  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;
};

/// Degrees not divisible by `prime`, sorted ascending.
struct PPrimeDegrees {
  std::vector<BigInt> degrees;
  std::uint64_t prime = 0;

  std::size_t size() const noexcept { return degrees.size(); }
  friend bool operator==(const PPrimeDegrees&, const PPrimeDegrees&) = default;
};

/// Raised when the computed degrees fail the sum-of-squares identity or a
/// common eigenspace refuses to split; never expected on valid input.
class CharacterDegreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The `count` smallest primes q with q = 1 (mod exponent) and q^2 > 4|G|,
/// searching below `bound`. Throws CharacterDegreeError if fewer exist.
std::vector<std::uint64_t> admissible_field_primes(std::uint64_t exponent, const BigInt& order,
                                                   std::size_t count,
                                                   std::uint64_t bound = std::uint64_t{1} << 31);

/// Exact irreducible degrees via simultaneous diagonalisation of the class
/// matrices over F_q. With no `field_prime`, the smallest admissible prime
/// is used; an explicit one must itself be admissible.
DegreeMultiset character_degrees(const ElementTable& table,
                                 std::optional<std::uint64_t> field_prime = std::nullopt);

PPrimeDegrees pprime_filter(const DegreeMultiset& d, Prime p);
PPrimeDegrees pprime_filter(const std::vector<BigInt>& degrees, Prime p);

}  // namespace mckay

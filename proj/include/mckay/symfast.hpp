#pragma once

#include <cstdint>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/chardeg.hpp"
#include "mckay/prime.hpp"

namespace mckay {

inline constexpr unsigned kDefaultPartitionBound = 60;

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<unsigned> parts;

  unsigned size() const;
  Partition conjugate() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Sylow-normaliser shape of S_n for p <= n < p^2: (AGL(1,p) wr S_a) x S_b.
struct NormalizerShape {
  std::uint64_t p;
  unsigned n, a, b;

  static NormalizerShape of(unsigned n, Prime p);
  BigInt order() const;
};

/// All partitions of n in reverse-lexicographic order ([n] first).
/// Throws std::out_of_range when n exceeds `bound`.
std::vector<Partition> partitions(unsigned n, unsigned bound = kDefaultPartitionBound);

/// n! / (product of hook lengths).
BigInt hook_degree(const Partition& lambda);

/// Degree multiset of S_n.
DegreeMultiset symmetric_degrees(unsigned n, unsigned bound = kDefaultPartitionBound);

PPrimeDegrees symmetric_pprime_degrees(unsigned n, Prime p,
                                       unsigned bound = kDefaultPartitionBound);

/// Degrees of AGL(1,p): p-1 linear characters and one of degree p-1.
DegreeMultiset agl1_degrees(Prime p);

/// Degrees of base wr S_k. Each entry of `base.degrees` is a separate
/// irreducible character even when values repeat.
DegreeMultiset wreath_degrees(const DegreeMultiset& base, unsigned k,
                              unsigned bound = kDefaultPartitionBound);

/// Degrees of a direct product: all pairwise products.
DegreeMultiset product_degrees(const DegreeMultiset& x, const DegreeMultiset& y);

/// p'-degrees of N_{S_n}(P) for p <= n < p^2. Throws std::domain_error
/// outside that window.
PPrimeDegrees normalizer_pprime_degrees(unsigned n, Prime p,
                                        unsigned bound = kDefaultPartitionBound);

}  // namespace mckay

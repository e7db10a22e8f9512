#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "mckay/bigint.hpp"

namespace mckay {

/// Bipartite graph with an edge i -> j whenever b[j] divides a[i].
struct DivisibilityGraph {
  std::vector<BigInt> a;
  std::vector<BigInt> b;
  std::vector<std::vector<std::size_t>> adjacency;  // per a-index, ascending b-indices

  bool balanced() const noexcept { return a.size() == b.size(); }
  std::size_t edge_count() const;
};

/// assignment[i] = j pairs a[i] with b[j].
struct Bijection {
  std::vector<std::size_t> assignment;
};

/// A-indices (ascending) whose joint neighbourhood is smaller than the set.
struct HallViolator {
  std::vector<std::size_t> a_indices;
};

/// |A| != |B|: no bijection of any kind.
struct CountMismatch {
  std::size_t a_size;
  std::size_t b_size;
};

using MatchingResult = std::variant<Bijection, HallViolator, CountMismatch>;

/// Throws std::invalid_argument on a nonpositive entry.
DivisibilityGraph build_graph(std::vector<BigInt> a, std::vector<BigInt> b);

/// Kuhn's augmenting-path matching. A-vertices are tried in list order and
/// neighbours in B-list order. When an A-vertex cannot be augmented, the
/// A-vertices reached by that search form the returned violator.
MatchingResult kuhn_match(const DivisibilityGraph& g);

/// Exhaustive search over permutations of B; sizes above `max_size` throw
/// std::length_error.
bool brute_force_match(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                       std::size_t max_size = 9);

/// Checks a result against the lists alone (adjacency is not trusted).
bool verify_result(const DivisibilityGraph& g, const MatchingResult& r);

/// Neighbourhood of a set of A-indices, recomputed from the values.
std::vector<std::size_t> neighbourhood(const DivisibilityGraph& g,
                                       const std::vector<std::size_t>& a_indices);

}  // namespace mckay

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/group_spec.hpp"
#include "mckay/permutation.hpp"

namespace mckay {

inline constexpr std::size_t kDefaultCap = 500000;

/// Thrown when enumeration would exceed the element cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Every element of a permutation group, stored contiguously, in
/// breadth-first closure order from the identity (generators applied in
/// list order). Element 0 is always the identity. Immutable once built.
class ElementTable {
 public:
  std::size_t size() const noexcept { return size_; }
  std::size_t degree() const noexcept { return degree_; }
  BigInt order() const { return BigInt(static_cast<unsigned long>(size_)); }

  /// 0-based image array of element i.
  std::span<const Point> images(std::size_t i) const {
    return {points_.data() + i * degree_, degree_};
  }
  Permutation element(std::size_t i) const;

  std::optional<std::size_t> index_of(std::span<const Point> images) const;
  std::optional<std::size_t> index_of(const Permutation& p) const { return index_of(p.data()); }

  /// Index of the product "apply element a, then element b".
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  /// Index of x^-1 g x.
  std::size_t conjugate(std::size_t g, std::size_t x) const;

  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Generator positions within the table.
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }

  /// lcm of all element orders.
  std::uint64_t exponent() const;

  friend ElementTable generate_elements(const std::vector<Permutation>& generators,
                                        std::size_t cap);

 private:
  ElementTable() = default;
  std::size_t insert(std::span<const Point> images);  // no duplicate check
  std::uint64_t hash(std::span<const Point> images) const;
  void grow_index();

  std::size_t degree_ = 0;
  std::size_t size_ = 0;
  std::vector<Point> points_;
  std::vector<std::uint32_t> slots_;  // index + 1; 0 = empty
  std::vector<Permutation> generators_;
  std::vector<std::size_t> generator_indices_;
};

/// Closure of `generators` (nonempty, equal degrees). Throws CapExceeded
/// when the group has more than `cap` elements.
ElementTable generate_elements(const std::vector<Permutation>& generators,
                               std::size_t cap = kDefaultCap);
ElementTable generate_elements(const GroupSpec& spec, std::size_t cap = kDefaultCap);

/// Exact order: closed formula for families, enumeration otherwise.
BigInt group_order(const GroupSpec& spec, std::size_t cap = kDefaultCap);

}  // namespace mckay

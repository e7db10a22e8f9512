#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mckay {

/// Point label used in storage. Stored images are 0-based; every textual
/// form (cycle notation, corpus files, CLI) is 1-based.
using Point = std::uint32_t;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bijection of {1..n}. Products act left to right: compose(a, b) applies
/// a first, then b, so conjugation is g^x = x^-1 g x.
class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 0);

  /// From 0-based images; throws std::invalid_argument unless bijective.
  static Permutation from_images(std::vector<Point> zero_based);
  /// From 1-based images, e.g. {2,3,1} for (1,2,3).
  static Permutation from_one_based(std::span<const Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  /// Image of the 1-based point `point`.
  Point image(Point point) const { return images_.at(point - 1) + 1; }
  std::vector<Point> one_based_images() const;
  bool is_identity() const noexcept;

  /// Raw 0-based image array.
  std::span<const Point> data() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images, int) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
/// x^-1 g x.
Permutation conjugate(const Permutation& g, const Permutation& x);
/// Order as lcm of cycle lengths (fits 64 bits for every degree we handle).
std::uint64_t element_order(std::span<const Point> images);
inline std::uint64_t element_order(const Permutation& p) { return element_order(p.data()); }

/// Parses disjoint-cycle notation such as "(1,2,3)(4,5)"; "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// Canonical cycle notation: each cycle starts at its least point, cycles
/// ordered by that point, fixed points omitted, identity printed as "()".
std::string to_cycles(const Permutation& p);
/// Largest point mentioned in a cycle string (0 for "()").
std::size_t max_point(std::string_view text);

}  // namespace mckay

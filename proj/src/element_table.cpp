#include "mckay/element_table.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>

namespace mckay {

CapExceeded::CapExceeded(std::size_t cap)
    : std::runtime_error("group has more than " + std::to_string(cap) + " elements"), cap_(cap) {}

Permutation ElementTable::element(std::size_t i) const {
  auto img = images(i);
  return Permutation::from_images(std::vector<Point>(img.begin(), img.end()));
}

std::uint64_t ElementTable::hash(std::span<const Point> images) const {
  std::uint64_t h = 0x243F6A8885A308D3ull;
  for (Point p : images) {
    h ^= p;
    h *= 0x9E3779B97F4A7C15ull;
    h ^= h >> 29;
  }
  return h;
}

std::optional<std::size_t> ElementTable::index_of(std::span<const Point> images) const {
  if (images.size() != degree_ || slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(images) & mask;; s = (s + 1) & mask) {
    std::uint32_t v = slots_[s];
    if (v == 0) return std::nullopt;
    std::size_t idx = v - 1;
    if (std::memcmp(points_.data() + idx * degree_, images.data(), degree_ * sizeof(Point)) == 0)
      return idx;
  }
}

void ElementTable::grow_index() {
  std::size_t cap = std::max<std::size_t>(64, slots_.size() * 2);
  slots_.assign(cap, 0);
  const std::size_t mask = cap - 1;
  for (std::size_t i = 0; i < size_; ++i) {
    std::size_t s = hash(images(i)) & mask;
    while (slots_[s] != 0) s = (s + 1) & mask;
    slots_[s] = static_cast<std::uint32_t>(i + 1);
  }
}

std::size_t ElementTable::insert(std::span<const Point> img) {
  if ((size_ + 1) * 2 > slots_.size()) grow_index();
  points_.insert(points_.end(), img.begin(), img.end());
  const std::size_t idx = size_++;
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(img) & mask;
  while (slots_[s] != 0) s = (s + 1) & mask;
  slots_[s] = static_cast<std::uint32_t>(idx + 1);
  return idx;
}

std::size_t ElementTable::multiply(std::size_t a, std::size_t b) const {
  auto x = images(a);
  auto y = images(b);
  std::vector<Point> r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r[i] = y[x[i]];
  auto idx = index_of(r);
  if (!idx) throw std::logic_error("element table is not closed under multiplication");
  return *idx;
}

std::size_t ElementTable::inverse(std::size_t a) const {
  auto x = images(a);
  std::vector<Point> r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r[x[i]] = static_cast<Point>(i);
  auto idx = index_of(r);
  if (!idx) throw std::logic_error("element table is not closed under inversion");
  return *idx;
}

std::size_t ElementTable::conjugate(std::size_t g, std::size_t x) const {
  // x^-1 g x maps x(i) -> x(g(i)).
  auto gi = images(g);
  auto xi = images(x);
  std::vector<Point> r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r[xi[i]] = xi[gi[i]];
  auto idx = index_of(r);
  if (!idx) throw std::logic_error("element table is not closed under conjugation");
  return *idx;
}

std::uint64_t ElementTable::exponent() const {
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < size_; ++i) e = std::lcm(e, element_order(images(i)));
  return e;
}

ElementTable generate_elements(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("generate_elements: no generators");
  ElementTable t;
  t.degree_ = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != t.degree_) throw std::invalid_argument("generators act on different degrees");
  if (cap == 0) throw CapExceeded(cap);
  t.generators_ = generators;

  Permutation id(t.degree_);
  t.insert(id.data());
  std::vector<Point> prod(t.degree_);
  for (std::size_t head = 0; head < t.size_; ++head) {
    for (const auto& g : generators) {
      auto x = t.images(head);
      auto y = g.data();
      for (std::size_t i = 0; i < t.degree_; ++i) prod[i] = y[x[i]];
      if (t.index_of(prod)) continue;
      if (t.size_ >= cap) throw CapExceeded(cap);
      t.insert(prod);
    }
  }
  for (const auto& g : generators) t.generator_indices_.push_back(*t.index_of(g));
  return t;
}

ElementTable generate_elements(const GroupSpec& spec, std::size_t cap) {
  if (const Family* f = spec.family(); f && family_order(*f) > cap) throw CapExceeded(cap);
  return generate_elements(expand_generators(spec), cap);
}

BigInt group_order(const GroupSpec& spec, std::size_t cap) {
  if (const Family* f = spec.family()) return family_order(*f);
  return generate_elements(spec, cap).order();
}

}  // namespace mckay

#pragma once

#include <cstdint>
#include <vector>

namespace mckay::detail {

// GF(p^f) with elements encoded as integers 0..q-1 whose base-p digits are
// the polynomial coefficients (digit i = coefficient of x^i). The modulus is
// the first monic degree-f polynomial, in encoding order, for which x is a
// primitive element.
class GaloisField {
 public:
  explicit GaloisField(std::uint32_t q);

  std::uint32_t size() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t extension_degree() const noexcept { return f_; }
  std::uint32_t primitive() const noexcept { return primitive_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }

  /// 1, w, ..., w^(f-1): an F_p-basis of the field.
  std::vector<std::uint32_t> additive_basis() const;

 private:
  std::uint32_t q_, p_, f_, primitive_ = 0;
  std::vector<std::uint32_t> add_, mul_;
};

}  // namespace mckay::detail

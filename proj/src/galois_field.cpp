#include "galois_field.hpp"

#include <stdexcept>
#include <string>

#include "mckay/prime.hpp"

namespace mckay::detail {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

Poly digits(std::uint32_t value, std::uint32_t p, std::uint32_t len) {
  Poly c(len);
  for (auto& d : c) {
    d = value % p;
    value /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
  return v;
}

// a*b mod (x^f + lower), lower given by `modulus` (f coefficients).
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  const std::size_t f = modulus.size();
  Poly prod(2 * f, 0);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = 2 * f - 1; k >= f; --k) {
    std::uint32_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // x^k = x^(k-f) * x^f = -x^(k-f) * lower
    for (std::size_t i = 0; i < f; ++i)
      prod[k - f + i] = (prod[k - f + i] + (p - c) * modulus[i]) % p;
  }
  prod.resize(f);
  return prod;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
  if (q < 2 || q > 1024) throw std::invalid_argument("field size must lie in 2..1024");
  p_ = 0;
  for (std::uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p_ = d;
      break;
    }
  f_ = 0;
  for (std::uint32_t r = q; r > 1; r /= p_) {
    if (r % p_ != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    ++f_;
  }

  const Poly one = digits(1, p_, f_);
  Poly modulus;
  Poly x;
  for (std::uint32_t m = 0; m < q_; ++m) {
    modulus = digits(m, p_, f_);
    x = (f_ == 1) ? Poly{(p_ - modulus[0]) % p_} : digits(p_, p_, f_);
    if (encode(x, p_) == 0) continue;
    Poly pw = x;
    std::uint32_t order = 1;
    while (pw != one && order < q_) {
      pw = mulmod(pw, x, modulus, p_);
      ++order;
    }
    if (pw == one && order == q_ - 1) break;
    modulus.clear();
  }
  if (modulus.empty()) throw std::logic_error("no primitive modulus found");
  primitive_ = encode(x, p_);

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly pa = digits(a, p_, f_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly pb = digits(b, p_, f_);
      Poly s(f_);
      for (std::uint32_t i = 0; i < f_; ++i) s[i] = (pa[i] + pb[i]) % p_;
      add_[a * q_ + b] = encode(s, p_);
      mul_[a * q_ + b] = encode(mulmod(pa, pb, modulus, p_), p_);
    }
  }
}

std::vector<std::uint32_t> GaloisField::additive_basis() const {
  std::vector<std::uint32_t> basis{1};
  for (std::uint32_t i = 1; i < f_; ++i) basis.push_back(mul(basis.back(), primitive_));
  return basis;
}

}  // namespace mckay::detail

#include "mckay/prime_field.hpp"

#include <stdexcept>
#include <utility>

#include "mckay/prime.hpp"

namespace mckay::fq {

Field::Field(std::uint64_t q) : q_(q) {
  if (q >= (std::uint64_t{1} << 32) || !is_prime(q))
    throw std::invalid_argument("field modulus must be a prime below 2^32");
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1;
  a %= q_;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::size_t> row_reduce(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const std::uint64_t s = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const std::uint64_t factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix nullspace(const Field& f, const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(f, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix basis(m.cols() - pivots.size(), m.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(k, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(k, pivots[i]) = f.neg(r(i, free));
    ++k;
  }
  return basis;
}

Polynomial characteristic_polynomial(const Field& f, Matrix h) {
  const std::size_t n = h.rows();
  if (h.cols() != n) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(piv, k), h(c + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, piv), h(k, c + 1));
    }
    const std::uint64_t pinv = f.inv(h(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      const std::uint64_t t = f.mul(h(i, c), pinv);
      if (t == 0) continue;
      for (std::size_t k = 0; k < n; ++k) h(i, k) = f.sub(h(i, k), f.mul(t, h(c + 1, k)));
      for (std::size_t k = 0; k < n; ++k) h(k, c + 1) = f.add(h(k, c + 1), f.mul(t, h(k, i)));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
  std::vector<Polynomial> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial next(m + 1, 0);
    const auto& prev = p[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], prev[d]);
      next[d] = f.sub(next[d], f.mul(h(m - 1, m - 1), prev[d]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, h(i, i - 1));
      if (t == 0) break;
      const std::uint64_t coef = f.mul(t, h(i - 1, m - 1));
      for (std::size_t d = 0; d < p[i - 1].size(); ++d)
        next[d] = f.sub(next[d], f.mul(coef, p[i - 1][d]));
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::uint64_t evaluate(const Field& f, const Polynomial& p, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

std::vector<std::uint64_t> roots(const Field& f, const Polynomial& p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < f.modulus(); ++x)
    if (evaluate(f, p, x) == 0) out.push_back(x);
  return out;
}

Vector multiply(const Field& f, const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  Vector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

}  // namespace mckay::fq

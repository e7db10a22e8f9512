#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mckay::fq {

/// Arithmetic modulo a prime q < 2^32.
class Field {
 public:
  explicit Field(std::uint64_t q);

  std::uint64_t modulus() const noexcept { return q_; }
  std::uint64_t reduce(std::uint64_t a) const noexcept { return a % q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % q_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error on zero.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t q_;
};

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> data_;
};

using Vector = std::vector<std::uint64_t>;
/// Coefficients, constant term first; monic polynomials end in 1.
using Polynomial = std::vector<std::uint64_t>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const Field& f, Matrix& m);

/// Basis of {v : m v = 0}, one row per basis vector.
Matrix nullspace(const Field& f, const Matrix& m);

/// det(xI - m) via reduction to Hessenberg form.
Polynomial characteristic_polynomial(const Field& f, Matrix m);

std::uint64_t evaluate(const Field& f, const Polynomial& p, std::uint64_t x);

/// Distinct roots in F_q, ascending, found by exhaustive evaluation.
std::vector<std::uint64_t> roots(const Field& f, const Polynomial& p);

Vector multiply(const Field& f, const Matrix& m, const Vector& v);

}  // namespace mckay::fq

#include "mckay/chardeg.hpp"

#include <algorithm>
#include <string>

#include "mckay/prime_field.hpp"
#include "mckay/structure.hpp"

namespace mckay {

BigInt DegreeMultiset::sum_of_squares() const {
  BigInt s = 0;
  for (const auto& d : degrees) s += d * d;
  return s;
}

std::size_t DegreeMultiset::count_of(const BigInt& d) const {
  return static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), d));
}

std::vector<std::uint64_t> admissible_field_primes(std::uint64_t exponent, const BigInt& order,
                                                   std::size_t count, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  const BigInt four_order = 4 * order;
  for (std::uint64_t q = exponent + 1; q < bound && out.size() < count; q += exponent) {
    if (BigInt(q) * q <= four_order || !is_prime(q)) continue;
    out.push_back(q);
  }
  if (out.size() < count)
    throw CharacterDegreeError("no admissible field prime below " + std::to_string(bound) +
                               " for exponent " + std::to_string(exponent));
  return out;
}

namespace {

using fq::Field;
using fq::Matrix;

// A subspace of F_q^k held as a reduced row-echelon basis.
struct Subspace {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(const Field& f, Matrix rows) {
  auto pivots = fq::row_reduce(f, rows);
  Matrix trimmed(pivots.size(), rows.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < rows.cols(); ++c) trimmed(r, c) = rows(r, c);
  return {std::move(trimmed), std::move(pivots)};
}

// Column j of class matrix M_t: entry (i, k) counts pairs (x, y) with x in
// class t, y in class i and xy = z_k for the fixed representative z_k.
// Central characters are then common eigenvectors: M_t w = w_t w.
Matrix class_matrix(const Field& f, const ElementTable& table, const ConjugacyClasses& cc,
                    const std::vector<std::size_t>& inverse_of, std::size_t t) {
  const std::size_t k = cc.count();
  const std::size_t deg = table.degree();
  std::vector<std::uint64_t> counts(k * k, 0);
  std::vector<Point> y(deg);
  for (std::size_t col = 0; col < k; ++col) {
    auto z = table.images(cc.classes[col].representative);
    for (std::size_t x : cc.classes[t].members) {
      // y = x^-1 z : apply x^-1 then z.
      auto xi = table.images(inverse_of[x]);
      for (std::size_t p = 0; p < deg; ++p) y[p] = z[xi[p]];
      auto idx = table.index_of(y);
      if (!idx) throw std::logic_error("class_matrix: product outside the group");
      ++counts[cc.class_of[*idx] * k + col];
    }
  }
  Matrix m(k, k);
  for (std::size_t i = 0; i < k * k; ++i) m(i / k, i % k) = f.reduce(counts[i]);
  return m;
}

// Splits `space` into the eigenspaces of `m` restricted to it.
std::vector<Subspace> split(const Field& f, const Matrix& m, const Subspace& space) {
  const std::size_t d = space.basis.rows();
  const std::size_t k = space.basis.cols();
  // Restriction: coordinates of M w_t read off at the pivot columns.
  Matrix restricted(d, d);
  for (std::size_t t = 0; t < d; ++t) {
    fq::Vector w(k);
    for (std::size_t c = 0; c < k; ++c) w[c] = space.basis(t, c);
    fq::Vector image = fq::multiply(f, m, w);
    for (std::size_t s = 0; s < d; ++s) restricted(s, t) = image[space.pivots[s]];
  }
  const auto eigenvalues = fq::roots(f, fq::characteristic_polynomial(f, restricted));
  if (eigenvalues.size() <= 1) return {space};

  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (std::uint64_t lambda : eigenvalues) {
    Matrix shifted = restricted;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) = f.sub(shifted(i, i), lambda);
    Matrix coords = fq::nullspace(f, shifted);
    Matrix vectors(coords.rows(), k);
    for (std::size_t r = 0; r < coords.rows(); ++r)
      for (std::size_t t = 0; t < d; ++t) {
        if (coords(r, t) == 0) continue;
        for (std::size_t c = 0; c < k; ++c)
          vectors(r, c) = f.add(vectors(r, c), f.mul(coords(r, t), space.basis(t, c)));
      }
    total += coords.rows();
    parts.push_back(make_subspace(f, std::move(vectors)));
  }
  if (total != d) throw CharacterDegreeError("class matrix is not diagonalisable over F_q");
  return parts;
}

}  // namespace

DegreeMultiset character_degrees(const ElementTable& table,
                                 std::optional<std::uint64_t> field_prime) {
  const BigInt order = table.order();
  const ConjugacyClasses cc = conjugacy_classes(table);
  const std::size_t k = cc.count();

  if (k == table.size()) return {std::vector<BigInt>(k, BigInt(1)), order};

  const std::uint64_t exponent = table.exponent();
  std::uint64_t q;
  if (field_prime) {
    q = *field_prime;
    if (!is_prime(q) || (q - 1) % exponent != 0 || BigInt(q) * q <= 4 * order)
      throw std::invalid_argument("field prime " + std::to_string(q) + " is not admissible");
  } else {
    q = admissible_field_primes(exponent, order, 1).front();
  }
  const Field f(q);

  std::vector<std::size_t> inverse_of(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) inverse_of[i] = table.inverse(i);

  std::vector<Subspace> spaces{{Matrix::identity(k), {}}};
  for (std::size_t c = 0; c < k; ++c) spaces[0].pivots.push_back(c);

  auto all_lines = [&] {
    return std::all_of(spaces.begin(), spaces.end(),
                       [](const Subspace& s) { return s.basis.rows() == 1; });
  };
  for (std::size_t t = 1; t < k && !all_lines(); ++t) {
    const Matrix m = class_matrix(f, table, cc, inverse_of, t);
    std::vector<Subspace> next;
    for (const auto& s : spaces) {
      if (s.basis.rows() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(f, m, s)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (!all_lines()) throw CharacterDegreeError("common eigenspaces did not split to lines");

  // chi(1)^2 = |G| / sum_i w_i w_i' / |C_i| with w normalised to w_0 = 1.
  const std::uint64_t order_mod = mpz_fdiv_ui(order.get_mpz_t(), q);
  std::vector<std::uint64_t> inv_class_size(k);
  std::vector<std::size_t> inverse_class(k);
  for (std::size_t i = 0; i < k; ++i) {
    inv_class_size[i] = f.inv(cc.classes[i].members.size() % q);
    inverse_class[i] = cc.class_of[inverse_of[cc.classes[i].representative]];
  }
  const std::uint64_t root_bound = mpz_class(sqrt(order)).get_ui();

  DegreeMultiset out{{}, order};
  for (const auto& s : spaces) {
    const std::uint64_t lead = s.basis(0, 0);
    if (lead == 0) throw CharacterDegreeError("eigenvector vanishes on the identity class");
    const std::uint64_t scale = f.inv(lead);
    std::vector<std::uint64_t> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = f.mul(s.basis(0, i), scale);
    std::uint64_t norm = 0;
    for (std::size_t i = 0; i < k; ++i)
      norm = f.add(norm, f.mul(f.mul(w[i], w[inverse_class[i]]), inv_class_size[i]));
    const std::uint64_t d2 = f.mul(order_mod, f.inv(norm));
    std::uint64_t d = 0;
    for (std::uint64_t cand = 1; cand <= root_bound; ++cand)
      if (f.mul(cand % q, cand % q) == d2) {
        d = cand;
        break;
      }
    if (d == 0) throw CharacterDegreeError("no integral degree matches a central character");
    out.degrees.emplace_back(static_cast<unsigned long>(d));
  }
  std::sort(out.degrees.begin(), out.degrees.end());

  if (out.sum_of_squares() != order)
    throw CharacterDegreeError("degree sum of squares " + to_decimal(out.sum_of_squares()) +
                               " differs from group order " + to_decimal(order));
  for (const auto& d : out.degrees)
    if (!divides(d, order)) throw CharacterDegreeError("degree does not divide the group order");
  return out;
}

PPrimeDegrees pprime_filter(const std::vector<BigInt>& degrees, Prime p) {
  PPrimeDegrees out{{}, p.value()};
  for (const auto& d : degrees)
    if (!p.divides(d)) out.degrees.push_back(d);
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

PPrimeDegrees pprime_filter(const DegreeMultiset& d, Prime p) { return pprime_filter(d.degrees, p); }

}  // namespace mckay

#include "mckay/symfast.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mckay {

unsigned Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

Partition Partition::conjugate() const {
  Partition out;
  if (parts.empty()) return out;
  out.parts.resize(parts.front());
  for (unsigned row : parts)
    for (unsigned c = 0; c < row; ++c) ++out.parts[c];
  return out;
}

NormalizerShape NormalizerShape::of(unsigned n, Prime p) {
  const std::uint64_t pv = p.value();
  if (n < pv || std::uint64_t{n} >= pv * pv)
    throw std::domain_error("normalizer shape needs p <= n < p^2 (n=" + std::to_string(n) +
                            ", p=" + std::to_string(pv) + ")");
  return {pv, n, static_cast<unsigned>(n / pv), static_cast<unsigned>(n % pv)};
}

BigInt NormalizerShape::order() const {
  BigInt base = BigInt(static_cast<unsigned long>(p)) * (p - 1);
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), a);
  return r * factorial(a) * factorial(b);
}

namespace {

void check_bound(unsigned n, unsigned bound) {
  if (n > bound)
    throw std::out_of_range("partition bound exceeded: " + std::to_string(n) + " > " +
                            std::to_string(bound));
}

void extend(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({prefix});
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(unsigned n, unsigned bound) {
  check_bound(n, bound);
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  extend(n, n, prefix, out);
  return out;
}

BigInt hook_degree(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (unsigned i = 0; i < lambda.parts.size(); ++i)
    for (unsigned j = 0; j < lambda.parts[i]; ++j)
      hooks *= (lambda.parts[i] - j - 1) + (conj.parts[j] - i - 1) + 1;
  BigInt n_fact = factorial(lambda.size());
  if (!divides(hooks, n_fact)) throw std::logic_error("hook product does not divide n!");
  return n_fact / hooks;
}

DegreeMultiset symmetric_degrees(unsigned n, unsigned bound) {
  DegreeMultiset out{{}, factorial(n)};
  for (const auto& lambda : partitions(n, bound)) out.degrees.push_back(hook_degree(lambda));
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

PPrimeDegrees symmetric_pprime_degrees(unsigned n, Prime p, unsigned bound) {
  return pprime_filter(symmetric_degrees(n, bound), p);
}

DegreeMultiset agl1_degrees(Prime p) {
  const unsigned long pv = p.value();
  DegreeMultiset out{std::vector<BigInt>(pv - 1, BigInt(1)), BigInt(pv) * (pv - 1)};
  out.degrees.emplace_back(pv - 1);
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

DegreeMultiset wreath_degrees(const DegreeMultiset& base, unsigned k, unsigned bound) {
  check_bound(k, bound);
  if (k == 0) throw std::invalid_argument("wreath_degrees: k must be positive");
  const std::size_t slots = base.degrees.size();
  if (slots == 0) throw std::invalid_argument("wreath_degrees: empty base");

  // hook degrees of S_m for every m <= k
  std::vector<std::vector<BigInt>> hooks(k + 1);
  for (unsigned m = 0; m <= k; ++m)
    for (const auto& lambda : partitions(m, bound)) hooks[m].push_back(hook_degree(lambda));

  DegreeMultiset out{{}, 0};
  mpz_pow_ui(out.group_order.get_mpz_t(), base.group_order.get_mpz_t(), k);
  out.group_order *= factorial(k);

  // Distribute k boxes over the slots, then pick a partition per slot.
  std::vector<unsigned> sizes(slots, 0);
  const BigInt k_fact = factorial(k);
  auto emit = [&](auto&& self, std::size_t slot, BigInt acc) -> void {
    if (slot == slots) {
      out.degrees.push_back(std::move(acc));
      return;
    }
    const unsigned m = sizes[slot];
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), base.degrees[slot].get_mpz_t(), m);
    for (const auto& h : hooks[m]) self(self, slot + 1, BigInt(acc * power * h));
  };
  auto distribute = [&](auto&& self, std::size_t slot, unsigned left) -> void {
    if (slot + 1 == slots) {
      sizes[slot] = left;
      BigInt denom = 1;
      for (unsigned m : sizes) denom *= factorial(m);
      // k! / prod m_i! is the multinomial coefficient; always integral.
      emit(emit, 0, BigInt(k_fact / denom));
      return;
    }
    for (unsigned m = left + 1; m-- > 0;) {
      sizes[slot] = m;
      self(self, slot + 1, left - m);
    }
  };
  distribute(distribute, 0, k);
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

DegreeMultiset product_degrees(const DegreeMultiset& x, const DegreeMultiset& y) {
  DegreeMultiset out{{}, x.group_order * y.group_order};
  out.degrees.reserve(x.degrees.size() * y.degrees.size());
  for (const auto& d : x.degrees)
    for (const auto& e : y.degrees) out.degrees.push_back(d * e);
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

PPrimeDegrees normalizer_pprime_degrees(unsigned n, Prime p, unsigned bound) {
  const auto shape = NormalizerShape::of(n, p);
  DegreeMultiset sylow_part = wreath_degrees(agl1_degrees(p), shape.a, bound);
  DegreeMultiset rest = symmetric_degrees(shape.b, bound);
  return pprime_filter(product_degrees(sylow_part, rest), p);
}

}  // namespace mckay

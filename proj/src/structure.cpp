#include "mckay/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace mckay {

ConjugacyClasses conjugacy_classes(const ElementTable& table) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ConjugacyClasses out;
  out.class_of.assign(table.size(), kUnset);
  const auto& gens = table.generator_indices();
  std::vector<std::size_t> queue;
  for (std::size_t g = 0; g < table.size(); ++g) {
    if (out.class_of[g] != kUnset) continue;
    const std::size_t cls = out.classes.size();
    // The orbit under conjugation by the generators is the full class.
    queue.assign(1, g);
    out.class_of[g] = cls;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t x : gens) {
        std::size_t c = table.conjugate(queue[head], x);
        if (out.class_of[c] == kUnset) {
          out.class_of[c] = cls;
          queue.push_back(c);
        }
      }
    std::sort(queue.begin(), queue.end());
    out.classes.push_back({g, queue});
  }
  return out;
}

Subgroup Subgroup::generated_by(const ElementTable& table, std::vector<std::size_t> generators) {
  Subgroup s;
  s.mask_.assign(table.size(), false);
  s.mask_[0] = true;
  s.members_.push_back(0);
  for (std::size_t head = 0; head < s.members_.size(); ++head)
    for (std::size_t g : generators) {
      std::size_t c = table.multiply(s.members_[head], g);
      if (!s.mask_[c]) {
        s.mask_[c] = true;
        s.members_.push_back(c);
      }
    }
  std::sort(s.members_.begin(), s.members_.end());
  generators.erase(std::remove(generators.begin(), generators.end(), std::size_t{0}),
                   generators.end());
  s.generators_ = std::move(generators);
  return s;
}

Subgroup Subgroup::trivial(const ElementTable& table) { return generated_by(table, {}); }

Subgroup Subgroup::whole(const ElementTable& table) {
  return generated_by(table, table.generator_indices());
}

ElementTable Subgroup::materialize(const ElementTable& table) const {
  std::vector<Permutation> gens;
  for (std::size_t g : generators_) gens.push_back(table.element(g));
  if (gens.empty()) gens.emplace_back(table.degree());
  return generate_elements(gens, table.size());
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool normalizes(const ElementTable& table, const Subgroup& h, std::size_t x) {
  for (std::size_t g : h.generators())
    if (!h.contains(table.conjugate(g, x))) return false;
  return true;
}

// Shrinks a subgroup's generating set to those elements that enlarge the
// closure when scanned in member order.
Subgroup with_small_generating_set(const ElementTable& table, const std::vector<std::size_t>& members) {
  Subgroup cur = Subgroup::trivial(table);
  std::vector<std::size_t> gens;
  for (std::size_t m : members) {
    if (cur.order() == members.size()) break;
    if (cur.contains(m)) continue;
    gens.push_back(m);
    cur = Subgroup::generated_by(table, gens);
  }
  return cur;
}

}  // namespace

Subgroup sylow_subgroup(const ElementTable& table, Prime p) {
  const std::uint64_t target = p_part(table.order(), p.value()).get_ui();
  Subgroup cur = Subgroup::trivial(table);
  std::vector<std::uint64_t> orders(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) orders[i] = element_order(table.images(i));
  while (cur.order() < target) {
    bool grown = false;
    for (std::size_t x = 1; x < table.size(); ++x) {
      if (cur.contains(x) || !is_power_of(orders[x], p.value()) || !normalizes(table, cur, x))
        continue;
      auto gens = cur.generators();
      gens.push_back(x);
      cur = Subgroup::generated_by(table, std::move(gens));
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow_subgroup: no p-element extends the p-subgroup");
  }
  return cur;
}

Subgroup normalizer(const ElementTable& table, const Subgroup& h) {
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < table.size(); ++x)
    if (h.contains(x) || normalizes(table, h, x)) members.push_back(x);
  return with_small_generating_set(table, members);
}

Subgroup derived_subgroup(const ElementTable& table, const Subgroup& h) {
  const auto& hg = h.generators();
  std::vector<std::size_t> gens;
  for (std::size_t a : hg)
    for (std::size_t b : hg) {
      // a^-1 b^-1 a b
      std::size_t c = table.multiply(table.multiply(table.inverse(a), table.inverse(b)),
                                     table.multiply(a, b));
      if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }
  Subgroup n = Subgroup::generated_by(table, gens);
  // Normal closure inside H.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t g : std::vector<std::size_t>(n.generators()))
      for (std::size_t x : hg) {
        std::size_t c = table.conjugate(g, x);
        if (!n.contains(c)) {
          gens.push_back(c);
          n = Subgroup::generated_by(table, gens);
          changed = true;
        }
      }
  }
  return n;
}

DerivedSeries derived_series_solvable(const ElementTable& table) {
  DerivedSeries out{false, {table.size()}};
  Subgroup cur = Subgroup::whole(table);
  while (cur.order() > 1) {
    Subgroup next = derived_subgroup(table, cur);
    if (next.order() == cur.order()) return out;
    out.orders.push_back(next.order());
    cur = std::move(next);
  }
  out.solvable = true;
  return out;
}

std::size_t linear_character_count(const ElementTable& table) {
  return table.size() / derived_subgroup(table, Subgroup::whole(table)).order();
}

}  // namespace mckay

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mckay/element_table.hpp"
#include "mckay/prime.hpp"

namespace mckay {

struct ConjugacyClass {
  std::size_t representative;        // least element index in the class
  std::vector<std::size_t> members;  // ascending
};

/// Classes are listed in order of their representatives, so class 0 is
/// the identity class.
struct ConjugacyClasses {
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;  // element index -> class index

  std::size_t count() const noexcept { return classes.size(); }
};

ConjugacyClasses conjugacy_classes(const ElementTable& table);

/// A subgroup of an enumerated group, held as indices into its table.
class Subgroup {
 public:
  /// Closure of the given elements inside `table`.
  static Subgroup generated_by(const ElementTable& table, std::vector<std::size_t> generators);
  static Subgroup trivial(const ElementTable& table);
  static Subgroup whole(const ElementTable& table);

  std::size_t order() const noexcept { return members_.size(); }
  bool contains(std::size_t element) const { return mask_[element]; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }

  /// The subgroup as a standalone group (re-enumerated from its generators).
  ElementTable materialize(const ElementTable& table) const;

 private:
  std::vector<std::size_t> members_;     // ascending
  std::vector<std::size_t> generators_;  // may be empty for the trivial group
  std::vector<bool> mask_;
};

/// A Sylow p-subgroup, built by extending a p-subgroup with the first
/// (table order) p-element of its normalizer lying outside it.
Subgroup sylow_subgroup(const ElementTable& table, Prime p);

/// {x in G : H^x = H}.
Subgroup normalizer(const ElementTable& table, const Subgroup& h);

/// Commutator subgroup [H, H] as a subgroup of the same table.
Subgroup derived_subgroup(const ElementTable& table, const Subgroup& h);

struct DerivedSeries {
  bool solvable;
  std::vector<std::size_t> orders;  // |G|, |G'|, ... until it stabilises
};

DerivedSeries derived_series_solvable(const ElementTable& table);

/// |G / G'|, the number of linear characters.
std::size_t linear_character_count(const ElementTable& table);

}  // namespace mckay

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/chardeg.hpp"
#include "mckay/element_table.hpp"
#include "mckay/group_spec.hpp"
#include "mckay/prime.hpp"

namespace mckay {

enum class Route { trivial, generic, symfast };
enum class Verdict { bijection, no_bijection, count_mismatch, out_of_scale };

const char* to_string(Route r);
const char* to_string(Verdict v);

/// Wall-clock milliseconds per phase of one check.
struct PhaseTimings {
  double enumerate = 0, sylow = 0, normalizer = 0, degrees = 0, match = 0, total = 0;
};

/// One (group, prime) verdict with the evidence behind it. Degree lists are
/// sorted ascending and absent when they could not be computed.
struct CheckReport {
  std::string group_id;
  std::optional<BigInt> group_order;
  std::uint64_t prime = 0;
  std::optional<Route> route;
  std::optional<std::vector<BigInt>> a_degrees;
  std::optional<std::vector<BigInt>> b_degrees;
  Verdict verdict = Verdict::out_of_scale;
  std::optional<std::vector<std::pair<BigInt, BigInt>>> bijection;  // (chi(1), f(chi)(1))
  std::optional<std::vector<BigInt>> violator;                      // A-values
  PhaseTimings elapsed_ms;
};

/// Lazily computed data for one group, shared across primes.
class GroupContext {
 public:
  GroupContext(GroupSpec spec, std::size_t cap);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::size_t cap() const noexcept { return cap_; }

  /// Exact order, or nullopt when a generator-given group exceeds the cap.
  const std::optional<BigInt>& order();
  /// Element table, or nullptr when the group exceeds the cap.
  const ElementTable* table();
  /// Full degree multiset by the cheapest available method (hook lengths
  /// for symmetric groups, otherwise the class-matrix method).
  const std::optional<DegreeMultiset>& degrees();
  /// Degree multiset from the element table; nullopt beyond the cap.
  const std::optional<DegreeMultiset>& enumerated_degrees();

  /// Accumulated enumeration and degree time, attributed to the next report.
  double take_enumerate_ms();
  double take_degrees_ms();

 private:
  GroupSpec spec_;
  std::size_t cap_;
  bool order_done_ = false, table_done_ = false, degrees_done_ = false, enumerated_done_ = false;
  std::optional<BigInt> order_;
  std::unique_ptr<ElementTable> table_;
  std::optional<DegreeMultiset> degrees_, enumerated_;
  double enumerate_ms_ = 0, degrees_ms_ = 0;
};

/// The two p'-degree lists and how they were obtained; no matching.
CheckReport degrees_command(GroupContext& ctx, Prime p);
CheckReport degrees_command(const GroupSpec& spec, Prime p, std::size_t cap = kDefaultCap);

/// Route selection:
///   trivial  - p does not divide |G|; identity bijection.
///   symfast  - symmetric(n) with p <= n < p^2.
///   generic  - |G| <= cap: enumerate, Sylow, normaliser, degrees.
///   otherwise out_of_scale.
/// Every emitted bijection or violator has passed verify_result.
CheckReport check_group(GroupContext& ctx, Prime p);
CheckReport check_group(const GroupSpec& spec, Prime p, std::size_t cap = kDefaultCap);

enum class CellKind { trivial, diagonal, checked, out_of_scale };
const char* to_string(CellKind k);

struct TableCell {
  std::uint64_t prime;
  unsigned n;
  CellKind kind;
  CheckReport report;
};

/// Rows are primes; columns are S_q for each prime q <= max_n in `primes`.
struct SymmetricTable {
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> columns;
  std::vector<std::vector<TableCell>> cells;  // [row][column]
};

SymmetricTable symmetric_table(const std::vector<std::uint64_t>& primes, unsigned max_n,
                               std::size_t cap = kDefaultCap);

}  // namespace mckay

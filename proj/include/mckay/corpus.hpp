#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/checker.hpp"
#include "mckay/group_spec.hpp"

namespace mckay {

/// One line of a corpus file: a JSON object whose keys appear in this order
///   "id", then "generators" (array of cycle strings) or "family",
///   then optionally "order" (decimal string) and "solvable" (bool).
/// The action degree of a generator entry is the largest point mentioned.
struct CorpusEntry {
  std::string id;
  std::variant<std::vector<std::string>, std::string> source;
  std::optional<BigInt> order;
  std::optional<bool> solvable;
};

CorpusEntry parse_corpus_line(std::string_view line);
std::string format_corpus_line(const CorpusEntry& e);
GroupSpec to_spec(const CorpusEntry& e);

/// A parsed line or the reason it failed to parse.
struct CorpusRecord {
  std::size_t line = 0;
  std::variant<CorpusEntry, std::string> entry;
};

/// Blank lines and lines starting with '#' are skipped.
std::vector<CorpusRecord> read_corpus(std::istream& in);
std::vector<CorpusRecord> read_corpus_file(const std::string& path);

/// Looks up an entry by id; throws ParseError when absent.
CorpusEntry find_entry(const std::vector<CorpusRecord>& corpus, std::string_view id);

struct PrimeSelection {
  bool all_dividing = true;
  std::vector<std::uint64_t> primes;  // used when !all_dividing
};

struct BatchItem {
  std::string id;
  std::size_t line = 0;
  std::optional<std::string> error;
  std::optional<bool> solvable;
  std::vector<CheckReport> reports;
};

struct BatchSummary {
  std::size_t entries = 0;
  std::size_t errors = 0;
  std::size_t reports = 0;
  std::size_t bijection = 0, no_bijection = 0, count_mismatch = 0, out_of_scale = 0;
  /// "id p=P verdict" for each no_bijection on a solvable group and each
  /// count_mismatch.
  std::vector<std::string> counterexamples;

  /// 1 on any counterexample candidate, 2 on entry errors, else 0.
  int exit_code() const;
};

struct BatchResult {
  std::vector<BatchItem> items;  // input order
  BatchSummary summary;
};

/// Checks every entry against the selected primes using up to `jobs`
/// worker threads. Entry failures are recorded, never thrown.
BatchResult batch(const std::vector<CorpusRecord>& corpus, const PrimeSelection& primes,
                  std::size_t cap, unsigned jobs = 1);

/// One JSON line per report or entry error, then a summary line.
void write_batch(std::ostream& out, const BatchResult& r, bool with_timing = true);

}  // namespace mckay

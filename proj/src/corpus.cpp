#include "mckay/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <ostream>
#include <thread>

#include "mckay/element_table.hpp"
#include "mckay/prime.hpp"
#include "mckay/report_json.hpp"
#include "mckay/structure.hpp"

namespace mckay {

CorpusEntry parse_corpus_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("corpus line is not JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("corpus line must be a JSON object");

  static const std::vector<std::string> kOrder{"id", "generators", "family", "order", "solvable"};
  std::size_t last = 0;
  for (const auto& [key, value] : j.items()) {
    auto it = std::find(kOrder.begin(), kOrder.end(), key);
    if (it == kOrder.end()) throw ParseError("unknown corpus field \"" + key + "\"");
    std::size_t pos = static_cast<std::size_t>(it - kOrder.begin()) + 1;
    if (pos <= last) throw ParseError("corpus field \"" + key + "\" out of order");
    last = pos;
  }

  CorpusEntry e;
  if (!j.contains("id") || !j["id"].is_string()) throw ParseError("corpus entry needs a string id");
  e.id = j["id"].get<std::string>();
  const bool has_gens = j.contains("generators");
  const bool has_family = j.contains("family");
  if (has_gens == has_family)
    throw ParseError(e.id + ": exactly one of generators or family is required");
  if (has_gens) {
    const auto& g = j["generators"];
    if (!g.is_array() || g.empty()) throw ParseError(e.id + ": generators must be a nonempty array");
    std::vector<std::string> gens;
    for (const auto& s : g) {
      if (!s.is_string()) throw ParseError(e.id + ": generators must be strings");
      gens.push_back(s.get<std::string>());
    }
    e.source = std::move(gens);
  } else {
    if (!j["family"].is_string()) throw ParseError(e.id + ": family must be a string");
    e.source = j["family"].get<std::string>();
  }
  if (j.contains("order")) {
    const auto& o = j["order"];
    if (!o.is_string()) throw ParseError(e.id + ": order must be a decimal string");
    BigInt v;
    if (v.set_str(o.get<std::string>(), 10) != 0 || v <= 0)
      throw ParseError(e.id + ": bad order \"" + o.get<std::string>() + "\"");
    e.order = v;
  }
  if (j.contains("solvable")) {
    if (!j["solvable"].is_boolean()) throw ParseError(e.id + ": solvable must be a boolean");
    e.solvable = j["solvable"].get<bool>();
  }
  return e;
}

std::string format_corpus_line(const CorpusEntry& e) {
  Json j;
  j["id"] = e.id;
  if (const auto* gens = std::get_if<std::vector<std::string>>(&e.source))
    j["generators"] = *gens;
  else
    j["family"] = std::get<std::string>(e.source);
  if (e.order) j["order"] = to_decimal(*e.order);
  if (e.solvable) j["solvable"] = *e.solvable;
  return j.dump();
}

GroupSpec to_spec(const CorpusEntry& e) {
  if (const auto* fam = std::get_if<std::string>(&e.source)) {
    GroupSpec spec = GroupSpec::from_family(parse_family(*fam));
    spec.id = e.id;
    return spec;
  }
  const auto& gens = std::get<std::vector<std::string>>(e.source);
  std::size_t degree = 1;
  for (const auto& g : gens) degree = std::max(degree, max_point(g));
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_cycles(g, degree));
  return GroupSpec::from_generators(e.id, std::move(perms));
}

std::vector<CorpusRecord> read_corpus(std::istream& in) {
  std::vector<CorpusRecord> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    CorpusRecord rec;
    rec.line = n;
    try {
      rec.entry = parse_corpus_line(line);
    } catch (const std::exception& ex) {
      rec.entry = std::string(ex.what());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CorpusRecord> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file " + path);
  return read_corpus(in);
}

CorpusEntry find_entry(const std::vector<CorpusRecord>& corpus, std::string_view id) {
  for (const auto& rec : corpus)
    if (const auto* e = std::get_if<CorpusEntry>(&rec.entry); e && e->id == id) return *e;
  throw ParseError("no corpus entry with id \"" + std::string(id) + "\"");
}

int BatchSummary::exit_code() const {
  if (!counterexamples.empty()) return 1;
  return errors > 0 ? 2 : 0;
}

namespace {

BatchItem run_entry(const CorpusRecord& rec, const PrimeSelection& sel, std::size_t cap) {
  BatchItem item;
  item.line = rec.line;
  if (const auto* err = std::get_if<std::string>(&rec.entry)) {
    item.id = "line " + std::to_string(rec.line);
    item.error = *err;
    return item;
  }
  const auto& entry = std::get<CorpusEntry>(rec.entry);
  item.id = entry.id;
  try {
    GroupContext ctx(to_spec(entry), cap);
    const auto& order = ctx.order();
    if (order && entry.order && *order != *entry.order) {
      item.error = "declared order " + to_decimal(*entry.order) + " but computed " +
                   to_decimal(*order);
      return item;
    }
    item.solvable = entry.solvable;
    if (const ElementTable* t = ctx.table()) {
      const bool solvable = derived_series_solvable(*t).solvable;
      if (entry.solvable && *entry.solvable != solvable) {
        item.error = std::string("declared solvable=") + (*entry.solvable ? "true" : "false") +
                     " but the derived series says otherwise";
        return item;
      }
      item.solvable = solvable;
    }
    std::vector<std::uint64_t> primes = sel.primes;
    if (sel.all_dividing) {
      if (!order) {
        item.error = "group exceeds the enumeration cap; cannot list dividing primes";
        return item;
      }
      primes = prime_divisors(*order);
    }
    for (auto p : primes) item.reports.push_back(check_group(ctx, Prime(p)));
  } catch (const std::exception& ex) {
    item.error = ex.what();
    item.reports.clear();
  }
  return item;
}

}  // namespace

BatchResult batch(const std::vector<CorpusRecord>& corpus, const PrimeSelection& sel,
                  std::size_t cap, unsigned jobs) {
  BatchResult out;
  out.items.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++)
      out.items[i] = run_entry(corpus[i], sel, cap);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  auto& s = out.summary;
  s.entries = corpus.size();
  for (const auto& item : out.items) {
    if (item.error) ++s.errors;
    for (const auto& r : item.reports) {
      ++s.reports;
      switch (r.verdict) {
        case Verdict::bijection: ++s.bijection; break;
        case Verdict::no_bijection: ++s.no_bijection; break;
        case Verdict::count_mismatch: ++s.count_mismatch; break;
        case Verdict::out_of_scale: ++s.out_of_scale; break;
      }
      const bool flagged = r.verdict == Verdict::count_mismatch ||
                           (r.verdict == Verdict::no_bijection && item.solvable.value_or(false));
      if (flagged)
        s.counterexamples.push_back(item.id + " p=" + std::to_string(r.prime) + " " +
                                    to_string(r.verdict));
    }
  }
  return out;
}

void write_batch(std::ostream& out, const BatchResult& r, bool with_timing) {
  for (const auto& item : r.items) {
    if (item.error) {
      Json j;
      j["group_id"] = item.id;
      j["line"] = item.line;
      j["error"] = *item.error;
      out << j.dump() << '\n';
      continue;
    }
    for (const auto& rep : item.reports) out << to_json(rep, with_timing).dump() << '\n';
  }
  const auto& s = r.summary;
  Json sum;
  sum["entries"] = s.entries;
  sum["errors"] = s.errors;
  sum["reports"] = s.reports;
  sum["bijection"] = s.bijection;
  sum["no_bijection"] = s.no_bijection;
  sum["count_mismatch"] = s.count_mismatch;
  sum["out_of_scale"] = s.out_of_scale;
  sum["counterexamples"] = s.counterexamples;
  sum["exit_code"] = s.exit_code();
  Json wrap;
  wrap["summary"] = std::move(sum);
  out << wrap.dump() << '\n';
}

}  // namespace mckay

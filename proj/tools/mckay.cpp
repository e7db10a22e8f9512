// Command-line front end: check, degrees, table, batch.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mckay/checker.hpp"
#include "mckay/corpus.hpp"
#include "mckay/report_json.hpp"

namespace {

using namespace mckay;

// "symmetric:7", "gl(2,3)", or "path/to/file.corpus:entry-id".
GroupSpec resolve_group(const std::string& text) {
  try {
    return GroupSpec::from_family(parse_family(text));
  } catch (const ParseError&) {
  }
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0)
    throw ParseError("--group must be family:args or FILE:ID, got \"" + text + "\"");
  const auto corpus = read_corpus_file(text.substr(0, colon));
  return to_spec(find_entry(corpus, text.substr(colon + 1)));
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size()) throw ParseError("bad prime \"" + item + "\"");
    out.push_back(Prime(v).value());
  }
  if (out.empty()) throw ParseError("empty prime list");
  return out;
}

std::string join(const std::optional<std::vector<BigInt>>& xs) {
  if (!xs) return "(unavailable)";
  std::string s;
  for (const auto& x : *xs) s += (s.empty() ? "" : " ") + to_decimal(x);
  return "[" + s + "]";
}

void print_report(const CheckReport& r, bool lists_only) {
  std::cout << "group   " << r.group_id << "\n"
            << "order   " << (r.group_order ? to_decimal(*r.group_order) : "(unknown)") << "\n"
            << "prime   " << r.prime << "\n"
            << "route   " << (r.route ? to_string(*r.route) : "none") << "\n"
            << "A (" << (r.a_degrees ? r.a_degrees->size() : 0) << ")  " << join(r.a_degrees) << "\n"
            << "B (" << (r.b_degrees ? r.b_degrees->size() : 0) << ")  " << join(r.b_degrees) << "\n";
  if (lists_only) return;
  std::cout << "verdict " << to_string(r.verdict) << "\n";
  if (r.bijection) {
    std::cout << "pairs  ";
    for (const auto& [a, b] : *r.bijection) std::cout << " " << a << "->" << b;
    std::cout << "\n";
  }
  if (r.violator) std::cout << "violator " << join(r.violator) << "\n";
}

const char* cell_symbol(const TableCell& c) {
  if (c.kind == CellKind::out_of_scale) return "  -  ";
  const bool ok = c.report.verdict == Verdict::bijection;
  if (c.kind == CellKind::trivial) return ok ? " (✓) " : " (✗) ";
  if (c.kind == CellKind::diagonal) return ok ? " [✓] " : " [✗] ";
  return ok ? "  ✓  " : "  ✗  ";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisibility bijections between p'-character degrees of a group and its Sylow normaliser"};
  app.require_subcommand(1);

  std::string group;
  std::uint64_t prime = 0;
  std::size_t cap = kDefaultCap;
  bool json = false, no_timing = false;

  auto* check = app.add_subcommand("check", "Decide one (group, prime) pair");
  check->add_option("--group", group, "family:args (e.g. symmetric:7, gl:2,3) or FILE:ID")->required();
  check->add_option("--prime", prime, "prime p")->required();
  check->add_option("--cap", cap, "enumeration cap for the generic route");
  check->add_flag("--json", json, "emit a JSON report");
  check->add_flag("--no-timing", no_timing, "omit timings from JSON");

  auto* degrees = app.add_subcommand("degrees", "Print the p'-degree lists A and B");
  degrees->add_option("--group", group, "family:args or FILE:ID")->required();
  degrees->add_option("--prime", prime, "prime p")->required();
  degrees->add_option("--cap", cap, "enumeration cap");
  degrees->add_flag("--json", json, "emit JSON");
  degrees->add_flag("--no-timing", no_timing, "omit timings from JSON");

  std::string primes_text = "2,3,5,7,11,13,17,19";
  unsigned max_n = 19;
  auto* table = app.add_subcommand("table", "Bijection matrix for symmetric groups S_q, q prime");
  table->add_option("--primes", primes_text, "ascending comma-separated primes");
  table->add_option("--max-n", max_n, "largest column S_q");
  table->add_option("--cap", cap, "enumeration cap");
  table->add_flag("--json", json, "emit JSON");
  table->add_flag("--no-timing", no_timing, "omit timings from JSON");

  std::string corpus_path, batch_primes = "all";
  unsigned jobs = 1;
  auto* batch_cmd = app.add_subcommand("batch", "Sweep a corpus file (JSON lines out)");
  batch_cmd->add_option("--corpus", corpus_path, "corpus file")->required();
  batch_cmd->add_option("--primes", batch_primes, "'all' (every dividing prime) or a list");
  batch_cmd->add_option("--jobs", jobs, "worker threads");
  batch_cmd->add_option("--cap", cap, "enumeration cap");
  batch_cmd->add_flag("--no-timing", no_timing, "omit timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed() || degrees->parsed()) {
      const GroupSpec spec = resolve_group(group);
      const Prime p(prime);
      const CheckReport r = check->parsed() ? check_group(spec, p, cap) : degrees_command(spec, p, cap);
      if (json) {
        std::cout << to_json(r, !no_timing).dump(2) << "\n";
      } else {
        print_report(r, degrees->parsed());
      }
      if (check->parsed() && r.verdict == Verdict::count_mismatch) return 1;
      return 0;
    }
    if (table->parsed()) {
      const auto t = symmetric_table(parse_prime_list(primes_text), max_n, cap);
      if (json) {
        std::cout << to_json(t, !no_timing).dump(2) << "\n";
        return 0;
      }
      std::cout << "       ";
      for (unsigned n : t.columns) {
        const std::string head = (n < 10 ? "  S_" : " S_") + std::to_string(n);
        std::cout << head << std::string(head.size() < 6 ? 6 - head.size() : 1, ' ');
      }
      std::cout << "\n";
      for (std::size_t i = 0; i < t.primes.size(); ++i) {
        std::string label = "p=" + std::to_string(t.primes[i]);
        std::cout << label << std::string(7 - std::min<std::size_t>(7, label.size()), ' ');
        for (const auto& c : t.cells[i]) std::cout << " " << cell_symbol(c);
        std::cout << "\n";
      }
      std::cout << "(✓) trivial: p does not divide |G|   [✓] p = n   - out of scale\n";
      return 0;
    }
    if (batch_cmd->parsed()) {
      PrimeSelection sel;
      if (batch_primes != "all") {
        sel.all_dividing = false;
        sel.primes = parse_prime_list(batch_primes);
      }
      const auto corpus = read_corpus_file(corpus_path);
      const auto result = batch(corpus, sel, cap, jobs);
      write_batch(std::cout, result, !no_timing);
      return result.summary.exit_code();
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

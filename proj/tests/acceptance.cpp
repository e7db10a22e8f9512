// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "groups.hpp"
#include "mckay/chardeg.hpp"
#include "mckay/checker.hpp"
#include "mckay/corpus.hpp"
#include "mckay/matching.hpp"
#include "mckay/report_json.hpp"
#include "mckay/structure.hpp"
#include "mckay/symfast.hpp"

using namespace mckay;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kCorpusDir = MCKAY_CORPUS_DIR;

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Collects the first reason a criterion failed.
struct Outcome {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

// --- criterion bodies; each also returns the JSON used by the determinism check

std::string figure_graph(Outcome& o) {
  const auto t0 = Clock::now();
  const auto g = build_graph(ints({6, 10, 22, 26}), ints({3, 5, 13, 2}));
  const auto r = kuhn_match(g);
  const double elapsed = ms_since(t0);

  const std::vector<std::vector<std::size_t>> edges{{0, 3}, {1, 3}, {3}, {2, 3}};
  o.require(g.adjacency == edges, "edge set differs");
  o.require(g.edge_count() == 7, "edge count != 7");
  o.require(std::holds_alternative<Bijection>(r), "no bijection");
  o.require(verify_result(g, r), "bijection failed verification");
  o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " ms");

  Json j;
  j["adjacency"] = g.adjacency;
  if (const auto* b = std::get_if<Bijection>(&r)) j["assignment"] = b->assignment;
  return j.dump();
}

std::string s25_count(Outcome& o) {
  const auto t0 = Clock::now();
  const auto r = degrees_command(GroupSpec::from_family(Family::symmetric(25)), Prime(5));
  const double elapsed = ms_since(t0);
  o.require(r.a_degrees && r.a_degrees->size() == 25, "|A| != 25");
  o.require(elapsed < 1000.0, "took " + std::to_string(elapsed) + " ms");
  return to_json(r, false).dump();
}

std::string table_one(Outcome& o) {
  // expected[p] = verdict per column S_2 ... S_19; '.' = out of scale, 't' = trivial
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19};
  const std::map<std::uint64_t, std::string> expected{
      {2, "YYYY...."}, {3, "tYYN...."}, {5, "ttYNNNNY"}, {7, "tttYYNYY"},
      {11, "ttttYYNN"}, {13, "tttttYYN"}, {17, "ttttttYY"}, {19, "tttttttY"},
  };
  const auto t0 = Clock::now();
  const auto t = symmetric_table(primes, 19);
  const double elapsed = ms_since(t0);

  o.require(t.columns == std::vector<unsigned>{2, 3, 5, 7, 11, 13, 17, 19}, "wrong columns");
  for (std::size_t row = 0; row < t.cells.size() && o.ok; ++row) {
    const auto& want = expected.at(t.primes[row]);
    for (std::size_t col = 0; col < t.cells[row].size(); ++col) {
      const auto& cell = t.cells[row][col];
      const char c = want[col];
      const std::string where =
          "p=" + std::to_string(cell.prime) + " S_" + std::to_string(cell.n) + ": ";
      const auto v = cell.report.verdict;
      if (c == '.') {
        o.require(v == Verdict::out_of_scale, where + "expected out_of_scale");
      } else if (c == 't') {
        o.require(cell.kind == CellKind::trivial && v == Verdict::bijection, where + "expected trivial");
      } else {
        o.require(v == (c == 'Y' ? Verdict::bijection : Verdict::no_bijection),
                  where + "got " + to_string(v));
        if (cell.prime == cell.n) o.require(cell.kind == CellKind::diagonal, where + "not diagonal");
      }
    }
  }
  o.require(elapsed < 5 * 60 * 1000.0, "took " + std::to_string(elapsed) + " ms");
  return to_json(t, false).dump();
}

void degree_oracles(Outcome& o) {
  for (unsigned n = 3; n <= 6; ++n)
    o.require(character_degrees(testing::table_of(Family::symmetric(n))) == symmetric_degrees(n),
              "hooks differ for n=" + std::to_string(n));

  const auto t0 = Clock::now();
  std::size_t groups = 0;
  for (const auto& rec : read_corpus_file(kCorpusDir + "/bundled.corpus")) {
    const auto* e = std::get_if<CorpusEntry>(&rec.entry);
    o.require(e != nullptr, "corpus line " + std::to_string(rec.line) + " unreadable");
    if (!e || (e->order && *e->order > 2000)) continue;
    const auto t = generate_elements(to_spec(*e));
    if (t.order() > 2000) continue;
    const auto d = character_degrees(t);
    o.require(d.sum_of_squares() == t.order(), e->id + ": sum of squares");
    for (const auto& x : d.degrees) o.require(divides(x, t.order()), e->id + ": degree divides");
    o.require(d.degrees.size() == conjugacy_classes(t).count(), e->id + ": class count");
    o.require(d.count_of(1) == linear_character_count(t), e->id + ": linear count");
    ++groups;
  }
  o.require(groups > 150, "only " + std::to_string(groups) + " groups swept");
  o.require(ms_since(t0) < 10 * 60 * 1000.0, "corpus sweep too slow");
}

void matching_oracles(Outcome& o) {
  auto agree = [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    const auto g = build_graph(a, b);
    const auto r = kuhn_match(g);
    o.require(std::holds_alternative<Bijection>(r) == brute_force_match(a, b), "disagreement");
    o.require(verify_result(g, r), "unverified result");
  };
  for (std::size_t size = 1; size <= 4; ++size) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < 2 * size; ++i) total *= 6;
    for (std::size_t code = 0; code < total && o.ok; ++code) {
      std::vector<BigInt> a, b;
      std::size_t c = code;
      for (std::size_t i = 0; i < 2 * size; ++i, c /= 6) (i < size ? a : b).emplace_back(1 + c % 6);
      agree(a, b);
    }
  }
  std::mt19937 rng(1729);
  for (int trial = 0; trial < 1000 && o.ok; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<BigInt> a, b;
    for (std::size_t i = 0; i < n; ++i) a.emplace_back(1 + rng() % 60);
    for (std::size_t i = 0; i < n; ++i) b.emplace_back(1 + rng() % 12);
    agree(a, b);
  }
}

void wreath_cross_check(Outcome& o) {
  const auto formula = wreath_degrees(agl1_degrees(Prime(5)), 2);
  const auto table = generate_elements(testing::agl15_wreath_s2());
  o.require(table.size() == 800, "realisation has order " + std::to_string(table.size()));
  o.require(formula == character_degrees(table), "AGL(1,5) wr S_2 degrees differ");

  const auto generic = check_group(
      GroupSpec::from_generators("S7", family_generators(Family::symmetric(7))), Prime(3));
  o.require(generic.route == Route::generic, "S_7 not on the generic route");
  o.require(generic.b_degrees && *generic.b_degrees == normalizer_pprime_degrees(7, Prime(3)).degrees,
            "normaliser degrees for S_7, p=3 differ");
}

void generic_symmetric(Outcome& o) {
  for (auto [n, p] : {std::pair{4u, 2ull}, {8u, 2ull}, {9u, 3ull}}) {
    const auto t0 = Clock::now();
    const auto r = check_group(
        GroupSpec::from_generators("S" + std::to_string(n), family_generators(Family::symmetric(n))),
        Prime(p));
    const std::string what = "S_" + std::to_string(n) + ", p=" + std::to_string(p);
    o.require(r.route == Route::generic, what + ": not generic");
    o.require(r.verdict == Verdict::bijection, what + ": " + to_string(r.verdict));
    o.require(ms_since(t0) < 15 * 60 * 1000.0, what + ": too slow");
  }
}

void solvable_sweep(Outcome& o) {
  const auto corpus = read_corpus_file(kCorpusDir + "/solvable.corpus");
  const auto r = batch(corpus, {}, kDefaultCap);
  o.require(r.summary.errors == 0, std::to_string(r.summary.errors) + " entry errors");
  o.require(r.summary.no_bijection == 0, std::to_string(r.summary.no_bijection) + " no_bijection");
  o.require(r.summary.count_mismatch == 0, "count mismatch");
  o.require(r.summary.exit_code() == 0, "exit code " + std::to_string(r.summary.exit_code()));
  o.require(r.summary.reports > 300, "only " + std::to_string(r.summary.reports) + " reports");
}

void lie_type(Outcome& o) {
  const std::vector<std::pair<Family, std::uint64_t>> cases{
      {Family::gl(2, 2), 2}, {Family::gl(2, 3), 3}, {Family::sl(2, 3), 3},
      {Family::gl(2, 4), 2}, {Family::gl(2, 5), 5}};
  for (const auto& [f, p] : cases) {
    const auto r = check_group(GroupSpec::from_family(f), Prime(p));
    o.require(r.verdict == Verdict::bijection,
              family_name(f) + ", p=" + std::to_string(p) + ": " + to_string(r.verdict));
  }
}

void determinism(Outcome& o) {
  Outcome scratch;
  const std::string first = figure_graph(scratch) + s25_count(scratch) + table_one(scratch);
  const std::string second = figure_graph(scratch) + s25_count(scratch) + table_one(scratch);
  o.require(first == second, "JSON differs between runs");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"figure graph and bijection", [](Outcome& o) { figure_graph(o); }},
      {"S_25 has 25 5'-degrees", [](Outcome& o) { s25_count(o); }},
      {"symmetric group table", [](Outcome& o) { table_one(o); }},
      {"character degree oracles", degree_oracles},
      {"matching oracles", matching_oracles},
      {"wreath product cross-check", wreath_cross_check},
      {"generic route on S_4, S_8, S_9", generic_symmetric},
      {"solvable corpus sweep", solvable_sweep},
      {"general and special linear groups", lie_type},
      {"deterministic reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %zu %s (%.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                ms_since(t0), o.ok ? "" : " -- ", o.why.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}

#include <doctest.h>

#include <algorithm>

#include "groups.hpp"
#include "mckay/checker.hpp"
#include "mckay/matching.hpp"
#include "mckay/report_json.hpp"
#include "mckay/symfast.hpp"

using namespace mckay;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

GroupSpec sym(unsigned n) { return GroupSpec::from_family(Family::symmetric(n)); }

// Same group, but handed over as bare generators so only the generic route applies.
GroupSpec sym_as_generators(unsigned n) {
  return GroupSpec::from_generators("S" + std::to_string(n),
                                    family_generators(Family::symmetric(n)));
}

// Evidence in a report must stand on its own.
void check_report_consistent(const CheckReport& r) {
  if (r.verdict == Verdict::out_of_scale) {
    CHECK_FALSE(r.bijection);
    CHECK_FALSE(r.violator);
    return;
  }
  REQUIRE(r.a_degrees);
  REQUIRE(r.b_degrees);
  CHECK(std::is_sorted(r.a_degrees->begin(), r.a_degrees->end()));
  CHECK(std::is_sorted(r.b_degrees->begin(), r.b_degrees->end()));
  for (const auto& d : *r.a_degrees) CHECK(d % r.prime != 0);
  for (const auto& d : *r.b_degrees) CHECK(d % r.prime != 0);
  if (r.verdict == Verdict::bijection) {
    REQUIRE(r.bijection);
    CHECK(r.bijection->size() == r.a_degrees->size());
    std::vector<BigInt> as, bs;
    for (const auto& [x, y] : *r.bijection) {
      CHECK(divides(y, x));
      as.push_back(x);
      bs.push_back(y);
    }
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());
    CHECK(as == *r.a_degrees);
    CHECK(bs == *r.b_degrees);
  }
  if (r.verdict == Verdict::no_bijection) {
    REQUIRE(r.violator);
    // |N(S)| < |S| recomputed from the values
    std::size_t reach = 0;
    for (const auto& b : *r.b_degrees) {
      bool hit = false;
      for (const auto& a : *r.violator) hit = hit || divides(b, a);
      reach += hit;
    }
    CHECK(reach < r.violator->size());
  }
}

}  // namespace

TEST_CASE("S_7 at p = 3 has no bijection") {
  const auto r = check_group(sym(7), Prime(3));
  CHECK(r.route == Route::symfast);
  CHECK(r.verdict == Verdict::no_bijection);
  REQUIRE(r.violator);
  CHECK(*r.violator == ints({1, 1, 14, 14, 14, 14}));
  CHECK(r.b_degrees->size() == 9);
  check_report_consistent(r);
}

TEST_CASE("p not dividing the order") {
  const auto r = check_group(sym(3), Prime(5));
  CHECK(r.route == Route::trivial);
  CHECK(r.verdict == Verdict::bijection);
  CHECK(*r.a_degrees == ints({1, 1, 2}));
  CHECK(*r.b_degrees == *r.a_degrees);
  check_report_consistent(r);
}

TEST_CASE("S_5 at p = 5") {
  const auto r = check_group(sym(5), Prime(5));
  CHECK(r.route == Route::symfast);
  CHECK(*r.a_degrees == ints({1, 1, 4, 4, 6}));
  CHECK(*r.b_degrees == ints({1, 1, 1, 1, 4}));
  CHECK(r.verdict == Verdict::bijection);
  check_report_consistent(r);
}

TEST_CASE("generic route on small groups") {
  const auto gl23 = check_group(GroupSpec::from_family(Family::gl(2, 3)), Prime(3));
  CHECK(gl23.route == Route::generic);
  CHECK(gl23.verdict == Verdict::bijection);
  CHECK(gl23.group_order == 48);
  check_report_consistent(gl23);

  const auto c6 = check_group(GroupSpec::from_family(Family::cyclic(6)), Prime(2));
  CHECK(c6.route == Route::generic);
  CHECK(*c6.a_degrees == std::vector<BigInt>(6, 1));
  CHECK(*c6.b_degrees == std::vector<BigInt>(6, 1));
  CHECK(c6.verdict == Verdict::bijection);

  const auto agl = check_group(GroupSpec::from_generators("agl", testing::agl15().generators()),
                               Prime(5));
  CHECK(*agl.a_degrees == ints({1, 1, 1, 1, 4}));
  CHECK(*agl.b_degrees == ints({1, 1, 1, 1, 4}));
}

TEST_CASE("generic and symmetric routes agree") {
  for (unsigned n : {5u, 6u, 7u}) {
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
      if (p > n || n >= p * p) continue;
      INFO("n = " << n << ", p = " << p);
      const auto fast = check_group(sym(n), Prime(p));
      const auto slow = check_group(sym_as_generators(n), Prime(p));
      CHECK(fast.route == Route::symfast);
      CHECK(slow.route == Route::generic);
      CHECK(fast.a_degrees == slow.a_degrees);
      CHECK(fast.b_degrees == slow.b_degrees);
      CHECK(fast.verdict == slow.verdict);
      check_report_consistent(slow);
    }
  }
}

TEST_CASE("out of scale") {
  const auto r = check_group(sym(11), Prime(2));
  CHECK(r.verdict == Verdict::out_of_scale);
  CHECK(r.group_order == factorial(11));
  CHECK(r.a_degrees);  // hook lengths still available
  CHECK_FALSE(r.b_degrees);

  const auto big = check_group(sym_as_generators(9), Prime(2), 1000);
  CHECK(big.verdict == Verdict::out_of_scale);
  CHECK_FALSE(big.group_order);

  // beyond the cap, but p does not divide the order
  const auto t = check_group(sym(11), Prime(13));
  CHECK(t.route == Route::trivial);
  CHECK(t.verdict == Verdict::bijection);
  check_report_consistent(t);
}

TEST_CASE("degrees command") {
  const auto r = degrees_command(sym(25), Prime(5));
  REQUIRE(r.a_degrees);
  CHECK(r.a_degrees->size() == 25);
  CHECK_FALSE(r.bijection);
  const auto s = degrees_command(sym(7), Prime(5));
  CHECK(s.a_degrees->size() == s.b_degrees->size());
  CHECK(s.route == Route::symfast);
}

TEST_CASE("deterministic output") {
  for (const auto& spec : {sym(7), GroupSpec::from_family(Family::gl(2, 3)), sym_as_generators(6)}) {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      const auto x = to_json(check_group(spec, Prime(p)), false).dump();
      const auto y = to_json(check_group(spec, Prime(p)), false).dump();
      CHECK(x == y);
    }
  }
}

TEST_CASE("JSON layout") {
  const auto j = to_json(check_group(sym(5), Prime(5)), false);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"group_id", "group_order", "prime", "route", "a_degrees",
                                         "b_degrees", "verdict", "bijection", "violator"});
  CHECK(j["verdict"] == "bijection");
  CHECK(j["violator"].is_null());
  CHECK(to_json(check_group(sym(5), Prime(5))).contains("elapsed_ms"));
}

TEST_CASE("small symmetric table") {
  const auto t = symmetric_table({2, 3, 5, 7}, 7);
  CHECK(t.columns == std::vector<unsigned>{2, 3, 5, 7});
  REQUIRE(t.cells.size() == 4);
  const auto& p3 = t.cells[1];
  CHECK(p3[0].kind == CellKind::trivial);
  CHECK(p3[1].kind == CellKind::diagonal);
  CHECK(p3[2].kind == CellKind::checked);
  CHECK(p3[2].report.verdict == Verdict::bijection);
  CHECK(p3[3].report.verdict == Verdict::no_bijection);
  CHECK(t.cells[2][3].report.verdict == Verdict::no_bijection);
  for (const auto& row : t.cells)
    for (const auto& cell : row) check_report_consistent(cell.report);
}

#include <doctest.h>

#include "groups.hpp"
#include "mckay/chardeg.hpp"
#include "mckay/corpus.hpp"
#include "mckay/structure.hpp"
#include "mckay/symfast.hpp"

using namespace mckay;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("character degrees of small groups") {
  CHECK(character_degrees(testing::table_of(Family::cyclic(7))).degrees == std::vector<BigInt>(7, 1));
  CHECK(character_degrees(testing::table_of(Family::symmetric(3))).degrees == ints({1, 1, 2}));
  CHECK(character_degrees(testing::table_of(Family::dihedral(8))).degrees == ints({1, 1, 1, 1, 2}));
  CHECK(character_degrees(testing::agl15()).degrees == ints({1, 1, 1, 1, 4}));
  CHECK(character_degrees(testing::table_of(Family::alternating(5))).degrees ==
        ints({1, 3, 3, 4, 5}));
  CHECK(character_degrees(testing::table_of(Family::sl(2, 3))).degrees ==
        ints({1, 1, 1, 2, 2, 2, 3}));
  CHECK(character_degrees(testing::table_of(Family::symmetric(1))).degrees == ints({1}));
}

TEST_CASE("agrees with hook lengths on S_n") {
  for (unsigned n = 3; n <= 7; ++n) {
    INFO("n = " << n);
    CHECK(character_degrees(testing::table_of(Family::symmetric(n))) == symmetric_degrees(n));
  }
}

TEST_CASE("admissible field primes") {
  // S_9: exponent 2520, sqrt(4 * 9!) ~ 1205
  CHECK(admissible_field_primes(2520, factorial(9), 2) == std::vector<std::uint64_t>{2521, 7561});
  CHECK_THROWS_AS(admissible_field_primes(2520, factorial(9), 1, 2000), CharacterDegreeError);
  CHECK_THROWS_AS(character_degrees(testing::table_of(Family::symmetric(3)), 11), std::invalid_argument);
  CHECK(character_degrees(testing::table_of(Family::symmetric(3)), 7).degrees == ints({1, 1, 2}));
}

TEST_CASE("degrees do not depend on the field prime") {
  const auto corpus = read_corpus_file(std::string(MCKAY_CORPUS_DIR) + "/bundled.corpus");
  int tested = 0;
  for (const auto& rec : corpus) {
    const auto& e = std::get<CorpusEntry>(rec.entry);
    if (*e.order > 200) continue;
    const auto t = generate_elements(to_spec(e));
    if (conjugacy_classes(t).count() == t.size()) continue;  // abelian short cut
    const auto primes = admissible_field_primes(t.exponent(), t.order(), 2);
    INFO(e.id);
    CHECK(character_degrees(t, primes[0]) == character_degrees(t, primes[1]));
    ++tested;
  }
  CHECK(tested > 40);
}

TEST_CASE("degree invariants on the corpus") {
  const auto corpus = read_corpus_file(std::string(MCKAY_CORPUS_DIR) + "/bundled.corpus");
  for (const auto& rec : corpus) {
    const auto& e = std::get<CorpusEntry>(rec.entry);
    if (*e.order > 2000) continue;
    const auto t = generate_elements(to_spec(e));
    const auto d = character_degrees(t);
    INFO(e.id);
    CHECK(d.sum_of_squares() == t.order());
    for (const auto& x : d.degrees) CHECK(divides(x, t.order()));
    CHECK(d.degrees.size() == conjugacy_classes(t).count());
    CHECK(d.count_of(1) == linear_character_count(t));
  }
}

TEST_CASE("pprime_filter") {
  const DegreeMultiset s3{ints({1, 1, 2}), 6};
  CHECK(pprime_filter(s3, Prime(2)).degrees == ints({1, 1}));
  CHECK(pprime_filter(s3, Prime(5)).degrees == ints({1, 1, 2}));
  CHECK(pprime_filter(symmetric_degrees(5), Prime(5)).degrees == ints({1, 1, 4, 4, 6}));
  CHECK(pprime_filter(s3, Prime(2)).prime == 2);
}

// Writes the bundled corpus files:
//   <dir>/bundled.corpus   every group below, with order and solvable flag
//   <dir>/solvable.corpus  the solvable subset
// Families are expanded to explicit generators so the files stand alone.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mckay/corpus.hpp"
#include "mckay/element_table.hpp"
#include "mckay/structure.hpp"

namespace {

using namespace mckay;
using Gens = std::vector<Permutation>;

Gens fam(Family f) { return family_generators(f); }
Gens cyclic(unsigned n) { return fam(Family::cyclic(n)); }
Gens sym(unsigned n) { return fam(Family::symmetric(n)); }
Gens alt(unsigned n) { return fam(Family::alternating(n)); }
Gens dih(unsigned order) { return fam(Family::dihedral(order)); }

// x -> x + 1 and x -> g x on Z/p, points 1..p standing for 0..p-1, with g
// the least primitive root.
Gens agl1(unsigned p) {
  unsigned g = 1;
  for (unsigned cand = 1; cand < p; ++cand) {
    unsigned x = cand, ord = 1;
    while (x != 1) x = x * cand % p, ++ord;
    if (ord == p - 1) {
      g = cand;
      break;
    }
  }
  std::vector<Point> mult(p);
  for (unsigned x = 0; x < p; ++x) mult[x] = x * g % p;
  return {cyclic(p).front(), Permutation::from_images(mult)};
}

Gens elementary_abelian(unsigned p, unsigned k) {
  Gens g = cyclic(p);
  for (unsigned i = 1; i < k; ++i) g = direct_product(g, cyclic(p));
  return g;
}

Gens times(const Gens& a, const Gens& b) { return direct_product(a, b); }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_corpus OUTPUT_DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::vector<std::pair<std::string, Gens>> groups;

  for (unsigned n = 1; n <= 64; ++n) groups.emplace_back("C" + std::to_string(n), cyclic(n));
  for (unsigned n = 6; n <= 128; n += 2) groups.emplace_back("D" + std::to_string(n), dih(n));
  for (unsigned n = 1; n <= 7; ++n) groups.emplace_back("S" + std::to_string(n), sym(n));
  for (unsigned n = 3; n <= 7; ++n) groups.emplace_back("A" + std::to_string(n), alt(n));

  const std::vector<std::pair<unsigned, unsigned>> elementary{
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {2, 10},
      {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {5, 2}, {5, 3}, {5, 4},
      {7, 2}, {7, 3}, {11, 2}, {13, 2}};
  for (auto [p, k] : elementary)
    groups.emplace_back("C" + std::to_string(p) + "^" + std::to_string(k), elementary_abelian(p, k));

  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) groups.emplace_back("AGL(1," + std::to_string(p) + ")", agl1(p));
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    groups.emplace_back("GL(2," + std::to_string(q) + ")", fam(Family::gl(2, q)));
    groups.emplace_back("SL(2," + std::to_string(q) + ")", fam(Family::sl(2, q)));
  }

  const Gens s3 = sym(3), s4 = sym(4), a4 = alt(4), d8 = dih(8);
  const Gens gl23 = fam(Family::gl(2, 3)), sl23 = fam(Family::sl(2, 3));
  const std::vector<std::pair<std::string, Gens>> products{
      {"S3xS3", times(s3, s3)},
      {"S3xC3", times(s3, cyclic(3))},
      {"S3xC4", times(s3, cyclic(4))},
      {"D8xC2", times(d8, cyclic(2))},
      {"D8xC3", times(d8, cyclic(3))},
      {"D8xD8", times(d8, d8)},
      {"C4xC4", times(cyclic(4), cyclic(4))},
      {"C4xC8", times(cyclic(4), cyclic(8))},
      {"S4xC2", times(s4, cyclic(2))},
      {"S4xC3", times(s4, cyclic(3))},
      {"S4xS3", times(s4, s3)},
      {"S4xS4", times(s4, s4)},
      {"S4xD8", times(s4, d8)},
      {"S4xC2^3", times(s4, elementary_abelian(2, 3))},
      {"A4xC2", times(a4, cyclic(2))},
      {"A4xC3", times(a4, cyclic(3))},
      {"A4xC2^2", times(a4, elementary_abelian(2, 2))},
      {"A4xS3", times(a4, s3)},
      {"A4xA4", times(a4, a4)},
      {"S3xC2^3", times(s3, elementary_abelian(2, 3))},
      {"S3xS3xS3", times(times(s3, s3), s3)},
      {"D12xC3", times(dih(12), cyclic(3))},
      {"D16xS3", times(dih(16), s3)},
      {"D10xC5", times(dih(10), cyclic(5))},
      {"D14xD10", times(dih(14), dih(10))},
      {"SL(2,3)xC2", times(sl23, cyclic(2))},
      {"SL(2,3)xC3", times(sl23, cyclic(3))},
      {"SL(2,3)xS3", times(sl23, s3)},
      {"GL(2,3)xC2", times(gl23, cyclic(2))},
      {"GL(2,3)xS3", times(gl23, s3)},
      {"GL(2,3)xA4", times(gl23, a4)},
      {"GL(2,3)xD10", times(gl23, dih(10))},
      {"AGL(1,5)xC2", times(agl1(5), cyclic(2))},
      {"AGL(1,5)xAGL(1,5)", times(agl1(5), agl1(5))},
      {"AGL(1,5)xS4", times(agl1(5), s4)},
      {"AGL(1,7)xC2", times(agl1(7), cyclic(2))},
      {"AGL(1,7)xS3", times(agl1(7), s3)},
      {"AGL(1,7)xS4", times(agl1(7), s4)},
      {"AGL(1,11)xC2", times(agl1(11), cyclic(2))},
      {"AGL(1,13)xS3", times(agl1(13), s3)},
      {"A5xC2", times(alt(5), cyclic(2))},
      {"A5xC3", times(alt(5), cyclic(3))},
      {"A5xS3", times(alt(5), s3)},
      {"S5xC2", times(sym(5), cyclic(2))},
  };
  groups.insert(groups.end(), products.begin(), products.end());

  std::ofstream all(dir + "/bundled.corpus"), solv(dir + "/solvable.corpus");
  if (!all || !solv) {
    std::cerr << "cannot write to " << dir << "\n";
    return 2;
  }
  const char* header =
      "# One group per line: {\"id\", \"generators\" | \"family\", \"order\", \"solvable\"}.\n"
      "# Generated by tools/gen_corpus; points are 1-based, products act left to right.\n";
  all << header;
  solv << header;
  for (const auto& [id, gens] : groups) {
    const ElementTable t = generate_elements(gens, 10000);
    CorpusEntry e;
    e.id = id;
    std::vector<std::string> cycles;
    for (const auto& g : gens) cycles.push_back(to_cycles(g));
    e.source = std::move(cycles);
    e.order = t.order();
    e.solvable = derived_series_solvable(t).solvable;
    all << format_corpus_line(e) << "\n";
    if (*e.solvable) solv << format_corpus_line(e) << "\n";
  }
  std::cout << "wrote " << groups.size() << " groups\n";
  return 0;
}

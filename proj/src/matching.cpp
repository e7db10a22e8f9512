#include "mckay/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mckay {

std::size_t DivisibilityGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& adj : adjacency) n += adj.size();
  return n;
}

DivisibilityGraph build_graph(std::vector<BigInt> a, std::vector<BigInt> b) {
  for (const auto* list : {&a, &b})
    for (const auto& x : *list)
      if (x <= 0) throw std::invalid_argument("degree lists must hold positive integers");
  DivisibilityGraph g{std::move(a), std::move(b), {}};
  g.adjacency.resize(g.a.size());
  for (std::size_t i = 0; i < g.a.size(); ++i)
    for (std::size_t j = 0; j < g.b.size(); ++j)
      if (divides(g.b[j], g.a[i])) g.adjacency[i].push_back(j);
  return g;
}

namespace {

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

class Kuhn {
 public:
  explicit Kuhn(const DivisibilityGraph& g)
      : g_(g), match_of_b_(g.b.size(), kFree), visited_b_(g.b.size(), false),
        visited_a_(g.a.size(), false) {}

  bool augment_from(std::size_t root) {
    std::fill(visited_b_.begin(), visited_b_.end(), false);
    std::fill(visited_a_.begin(), visited_a_.end(), false);
    return dfs(root);
  }

  std::vector<std::size_t> visited_a() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < visited_a_.size(); ++i)
      if (visited_a_[i]) out.push_back(i);
    return out;
  }

  std::vector<std::size_t> assignment() const {
    std::vector<std::size_t> out(g_.a.size(), kFree);
    for (std::size_t j = 0; j < match_of_b_.size(); ++j)
      if (match_of_b_[j] != kFree) out[match_of_b_[j]] = j;
    return out;
  }

 private:
  bool dfs(std::size_t u) {
    visited_a_[u] = true;
    for (std::size_t j : g_.adjacency[u]) {
      if (visited_b_[j]) continue;
      visited_b_[j] = true;
      if (match_of_b_[j] == kFree || dfs(match_of_b_[j])) {
        match_of_b_[j] = u;
        return true;
      }
    }
    return false;
  }

  const DivisibilityGraph& g_;
  std::vector<std::size_t> match_of_b_;
  std::vector<bool> visited_b_;
  std::vector<bool> visited_a_;
};

}  // namespace

MatchingResult kuhn_match(const DivisibilityGraph& g) {
  if (!g.balanced()) return CountMismatch{g.a.size(), g.b.size()};
  Kuhn kuhn(g);
  for (std::size_t i = 0; i < g.a.size(); ++i)
    if (!kuhn.augment_from(i)) return HallViolator{kuhn.visited_a()};
  return Bijection{kuhn.assignment()};
}

bool brute_force_match(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                       std::size_t max_size) {
  if (a.size() != b.size()) return false;
  if (a.size() > max_size) throw std::length_error("brute_force_match: instance too large");
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = divides(b[perm[i]], a[i]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::size_t> neighbourhood(const DivisibilityGraph& g,
                                       const std::vector<std::size_t>& a_indices) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < g.b.size(); ++j)
    for (std::size_t i : a_indices)
      if (divides(g.b[j], g.a.at(i))) {
        out.push_back(j);
        break;
      }
  return out;
}

bool verify_result(const DivisibilityGraph& g, const MatchingResult& r) {
  if (const auto* bij = std::get_if<Bijection>(&r)) {
    if (!g.balanced() || bij->assignment.size() != g.a.size()) return false;
    std::vector<bool> used(g.b.size(), false);
    for (std::size_t i = 0; i < g.a.size(); ++i) {
      const std::size_t j = bij->assignment[i];
      if (j >= g.b.size() || used[j] || !divides(g.b[j], g.a[i])) return false;
      used[j] = true;
    }
    return true;
  }
  if (const auto* hv = std::get_if<HallViolator>(&r)) {
    if (hv->a_indices.empty()) return false;
    std::vector<std::size_t> s = hv->a_indices;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.back() >= g.a.size()) return false;
    return neighbourhood(g, s).size() < s.size();
  }
  const auto& cm = std::get<CountMismatch>(r);
  return cm.a_size == g.a.size() && cm.b_size == g.b.size() && !g.balanced();
}

}  // namespace mckay

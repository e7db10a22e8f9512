#include "mckay/permutation.hpp"

#include <cctype>
#include <numeric>

namespace mckay {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> zero_based) {
  std::vector<bool> seen(zero_based.size(), false);
  for (Point p : zero_based) {
    if (p >= zero_based.size() || seen[p])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[p] = true;
  }
  return Permutation(std::move(zero_based), 0);
}

Permutation Permutation::from_one_based(std::span<const Point> images) {
  std::vector<Point> zb;
  zb.reserve(images.size());
  for (Point p : images) {
    if (p == 0) throw std::invalid_argument("point 0 in 1-based images");
    zb.push_back(p - 1);
  }
  return from_images(std::move(zb));
}

std::vector<Point> Permutation::one_based_images() const {
  std::vector<Point> out(images_);
  for (auto& p : out) ++p;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

static void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  auto x = a.data();
  auto y = b.data();
  std::vector<Point> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return Permutation::from_images(std::move(r));
}

Permutation inverse(const Permutation& a) {
  auto x = a.data();
  std::vector<Point> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[x[i]] = static_cast<Point>(i);
  return Permutation::from_images(std::move(r));
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  return compose(compose(inverse(x), g), x);
}

std::uint64_t element_order(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

namespace {

class CycleLexer {
 public:
  explicit CycleLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t number() {
    skip_space();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 0xFFFFFFFFu) fail("point too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a point");
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cycle notation \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Calls visit(cycle) for each parenthesised cycle; cycles are 1-based.
template <typename Visit>
void scan_cycles(std::string_view text, Visit&& visit) {
  CycleLexer lex(text);
  if (lex.done()) lex.fail("empty string");
  while (!lex.done()) {
    lex.expect('(');
    std::vector<std::size_t> cycle;
    if (!lex.accept(')')) {
      do cycle.push_back(lex.number());
      while (lex.accept(','));
      lex.expect(')');
    }
    visit(cycle, lex);
  }
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("parse_cycles: degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  scan_cycles(text, [&](const std::vector<std::size_t>& cycle, CycleLexer& lex) {
    for (std::size_t pt : cycle) {
      if (pt < 1 || pt > degree)
        lex.fail("point " + std::to_string(pt) + " out of range 1.." + std::to_string(degree));
      if (used[pt - 1]) lex.fail("point " + std::to_string(pt) + " repeated");
      used[pt - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
  });
  return Permutation::from_images(std::move(images));
}

std::size_t max_point(std::string_view text) {
  std::size_t best = 0;
  scan_cycles(text, [&](const std::vector<std::size_t>& cycle, CycleLexer&) {
    for (std::size_t pt : cycle) best = std::max(best, pt);
  });
  return best;
}

std::string to_cycles(const Permutation& p) {
  auto img = p.data();
  std::vector<bool> seen(img.size(), false);
  std::string out;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i] || img[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace mckay

#include "sylowbench/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sylowbench/errors.hpp"

namespace sylowbench {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    Point x = images[i];
    if (x >= images.size())
      throw Error("image " + std::to_string(x) + " of point " + std::to_string(i) +
                  " is outside the domain of degree " + std::to_string(images.size()));
    if (seen[x])
      throw Error("image table is not a bijection: " + std::to_string(x) + " is hit twice");
    seen[x] = true;
  }
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  std::vector<Point> out(a.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = a.images_[b.images_[x]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& a) {
  std::vector<Point> out(a.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[a.images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& g, const Permutation& a) {
  return compose(compose(g, a), inverse(g));
}

Permutation power(const Permutation& a, std::uint64_t exponent) {
  Permutation result(a.degree());
  Permutation base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = compose(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = compose(base, base);
  }
  return result;
}

CycleDecomposition cycles(const Permutation& a) {
  CycleDecomposition out;
  out.degree = a.degree();
  std::vector<bool> seen(a.degree(), false);
  // Scanning points in increasing order yields min-first cycles already
  // sorted by their first entry.
  for (Point start = 0; start < a.degree(); ++start) {
    if (seen[start] || a(start) == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = a(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Parity parity(const Permutation& a) {
  // degree - (#cycles including fixed points) = sum over nontrivial cycles
  // of (length - 1).
  std::size_t transpositions = 0;
  for (const auto& c : cycles(a).cycles) transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::uint64_t element_order(const Permutation& a) {
  std::uint64_t order = 1;
  for (const auto& c : cycles(a).cycles) {
    std::uint64_t len = c.size();
    std::uint64_t g = std::gcd(order, len);
    std::uint64_t factor = len / g;
    if (order > UINT64_MAX / factor) throw Error("element order exceeds 64-bit range");
    order *= factor;
  }
  return order;
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation parse() {
    Permutation result(degree_);
    skip_space();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '(') fail("expected '('");
      std::size_t open = pos_++;
      std::vector<Point> cycle = parse_cycle_body(open);
      if (!cycle.empty()) {
        std::vector<Point> images(degree_);
        std::iota(images.begin(), images.end(), Point{0});
        for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        // Later cycles act first: the product is built right to left.
        result = compose(result, Permutation::from_images(std::move(images)));
      }
      skip_space();
    }
    return result;
  }

 private:
  std::vector<Point> parse_cycle_body(std::size_t open) {
    std::vector<Point> cycle;
    std::vector<bool> in_cycle(degree_, false);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
      return cycle;  // "()" is the identity
    }
    bool after_comma = false;
    bool any = false;
    while (true) {
      if (pos_ >= text_.size()) fail("unclosed '(' opened", open);
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        skip_space();
        continue;
      }
      if (c == ')') {
        if (after_comma) fail("dangling separator before ')'");
        ++pos_;
        break;
      }
      if (c == ',') {
        if (after_comma || !any) fail("unexpected ','");
        ++pos_;
        after_comma = true;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(std::string("unexpected character '") + c + "'");
      std::size_t start = pos_;
      std::uint64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (value > degree_ + 1ULL) value = degree_ + 1ULL;  // saturate; reported below
        ++pos_;
      }
      if (value == 0) fail("points are numbered from 1", start);
      if (value > degree_)
        fail("point " + std::string(text_.substr(start, pos_ - start)) + " exceeds degree " +
                 std::to_string(degree_),
             start);
      Point p = static_cast<Point>(value - 1);
      if (in_cycle[p]) fail("point " + std::to_string(value) + " repeated within one cycle", start);
      in_cycle[p] = true;
      cycle.push_back(p);
      after_comma = false;
      any = true;
    }
    if (cycle.size() < 2) fail("a cycle needs at least two points", open);
    return cycle;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError("cycle notation: " + msg, at);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw Error("degree must be positive");
  return CycleParser(text, degree).parse();
}

std::string format_cycles(const Permutation& a) {
  CycleDecomposition d = cycles(a);
  if (d.cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : d.cycles) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i] + 1;
    out << ')';
  }
  return out.str();
}

}  // namespace sylowbench

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylowbench {

using Point = std::uint32_t;

// A bijection on {0, ..., degree-1} stored as its image table. Points are
// 0-based internally; the cycle-notation I/O is 1-based.
class Permutation {
 public:
  explicit Permutation(std::size_t degree = 1);

  // Throws Error unless `images` is a bijection on {0..size-1}.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;

  // Smallest point moved, or degree() for the identity.
  Point first_moved_point() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic by image table (the identity is the least element of any
  // degree).
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

enum class Parity { even, odd };

// Disjoint cycles of length >= 2 in canonical order: each cycle starts at its
// minimum, cycles sorted by first entry. Points are 0-based.
struct CycleDecomposition {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> cycles;
};

// (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
// g a g^-1
Permutation conjugate(const Permutation& g, const Permutation& a);
Permutation power(const Permutation& a, std::uint64_t exponent);

CycleDecomposition cycles(const Permutation& a);
Parity parity(const Permutation& a);
// lcm of the cycle lengths; throws Error on 64-bit overflow.
std::uint64_t element_order(const Permutation& a);

// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)". Cycles are applied
// right to left, so "(1 2)(1 3)" is the 3-cycle (1 3 2). Empty text and "()"
// both denote the identity. Throws ParseError with the offending position.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Canonical cycle notation with space separators; "()" for the identity.
std::string format_cycles(const Permutation& a);

}  // namespace sylowbench

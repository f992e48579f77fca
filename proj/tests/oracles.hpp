#pragma once

// Naive reference computations used to cross-check the engines. Everything
// here works on explicit element sets and touches none of the engine code
// except the Permutation type itself.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <vector>

#include "sylowbench/perm.hpp"

namespace oracle {

using sylowbench::Permutation;
using Set = std::set<Permutation>;

inline Permutation mul(const Permutation& a, const Permutation& b) {
  std::vector<sylowbench::Point> img(a.degree());
  for (sylowbench::Point x = 0; x < a.degree(); ++x) img[x] = a(b(x));
  return Permutation::from_images(std::move(img));
}

inline Permutation inv(const Permutation& a) {
  std::vector<sylowbench::Point> img(a.degree());
  for (sylowbench::Point x = 0; x < a.degree(); ++x) img[a(x)] = x;
  return Permutation::from_images(std::move(img));
}

inline Set closure(std::size_t degree, const std::vector<Permutation>& gens) {
  Set seen{Permutation(degree)};
  std::deque<Permutation> todo{Permutation(degree)};
  while (!todo.empty()) {
    Permutation x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation y = mul(g, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

inline Set conjugate_set(const Permutation& g, const Set& h) {
  Permutation gi = inv(g);
  Set out;
  for (const auto& x : h) out.insert(mul(mul(g, x), gi));
  return out;
}

inline std::uint64_t order_of(const Permutation& a) {
  Permutation id(a.degree()), x = a;
  std::uint64_t k = 1;
  while (x != id) x = mul(a, x), ++k;
  return k;
}

inline std::uint64_t centralizer_size(const Set& g, const Permutation& s) {
  return std::count_if(g.begin(), g.end(), [&](const Permutation& x) { return mul(x, s) == mul(s, x); });
}

inline std::uint64_t normalizer_size(const Set& g, const Set& h) {
  return std::count_if(g.begin(), g.end(), [&](const Permutation& x) { return conjugate_set(x, h) == h; });
}

// Distinct conjugates of h in g.
inline std::set<Set> conjugates(const Set& g, const Set& h) {
  std::set<Set> out;
  for (const auto& x : g) out.insert(conjugate_set(x, h));
  return out;
}

// Every subgroup, found by adjoining one element at a time to known
// subgroups. Only for small groups.
inline std::set<Set> all_subgroups(const Set& g) {
  std::size_t degree = g.begin()->degree();
  std::set<Set> found{Set{Permutation(degree)}};
  std::vector<Set> frontier{*found.begin()};
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& h : frontier)
      for (const auto& x : g) {
        if (h.count(x)) continue;
        std::vector<Permutation> gens(h.begin(), h.end());
        gens.push_back(x);
        Set k = closure(degree, gens);
        if (found.insert(k).second) next.push_back(k);
      }
    frontier = std::move(next);
  }
  return found;
}

inline bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t naive_pow_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) n /= p, r *= p;
  return r;
}

inline Permutation random_perm(std::size_t degree, std::mt19937_64& rng) {
  std::vector<sylowbench::Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<sylowbench::Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(img));
}

}  // namespace oracle

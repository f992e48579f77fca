#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sylowbench/caps.hpp"
#include "sylowbench/perm.hpp"

namespace sylowbench {

// Base and strong generating set built by deterministic Schreier-Sims. Base
// points are the prescribed prefix followed by the smallest points moved by
// the generators that need a new level.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  std::vector<Point> base() const;

  // Product of the basic orbit lengths; throws Error past 64 bits.
  std::uint64_t order() const;
  // Product of the basic orbit lengths from `level` on.
  std::uint64_t order_from(std::size_t level) const;

  // Residue of g and the level at which sifting stopped (length() when g
  // passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

  // Strong generators of the stabilizer of the first `level` base points.
  const std::vector<Permutation>& level_generators(std::size_t level) const;
  std::span<const Point> basic_orbit(std::size_t level) const;
  std::vector<Permutation> strong_generators() const;

 private:
  struct Level {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_index;  // point -> index into orbit, -1 if absent
    std::vector<Permutation> transversal;   // transversal[i](base) = orbit[i]
  };

  void rebuild_orbit(Level& level) const;
  void append_level(Point base);
  void schreier_sims();

  std::size_t degree_;
  std::vector<Level> levels_;
};

// Finite permutation group given by generators. The stabilizer chain is
// built on first use and shared by copies; concurrent first uses may both
// build it, and either result is kept.
class PermGroup {
 public:
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabilizerChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation& g) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_abelian() const;
  bool is_cyclic() const;

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

// Equality as subsets of Sym(degree).
bool same_subgroup(const PermGroup& a, const PermGroup& b);
// H normal in G: conjugates of H's generators by G's generators stay in H.
bool is_normal(const PermGroup& g, const PermGroup& h);

// Closure of the generators by breadth-first multiplication, returned in
// lexicographic order. Independent of the stabilizer chain. Throws
// CapExceeded carrying the partial count once more than `cap` elements turn up.
std::vector<Permutation> enumerate_elements(const PermGroup& g, std::uint64_t cap);

std::uint64_t group_order(const PermGroup& g);

// Generating set chosen greedily from a lexicographically sorted
// element list that is known to be a subgroup.
PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements);

struct OrbitStabilizer {
  std::vector<Point> orbit;  // sorted
  PermGroup stabilizer;
};

OrbitStabilizer orbit_and_stabilizer(const PermGroup& g, Point point);

// Orbits of the whole domain under the generators, each sorted, ordered by
// their least point.
std::vector<std::vector<Point>> orbits(const PermGroup& g);

enum class Method { brute_force, orbit_stabilizer };
const char* method_name(Method m);

// {g in G : gs = sg}. Brute force over the elements when |G| is within
// caps.elements, otherwise the stabilizer of s under conjugation, built from
// Schreier generators over the explicitly enumerated conjugacy orbit.
PermGroup centralizer(const PermGroup& g, const Permutation& s, const Caps& caps = {},
                      Method* used = nullptr);

// {g in G : gHg^-1 = H}. Throws NotASubgroup unless H <= G.
PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Caps& caps = {},
                     Method* used = nullptr);

struct ActionImage {
  PermGroup image;    // on the coset domain, degree |G:H|
  PermGroup kernel;   // core of H in G
  std::vector<Permutation> domain_labels;  // coset representative of each new point
};

// Action of G on the left cosets of H by left multiplication. H = 1 gives
// the regular representation.
ActionImage coset_action(const PermGroup& g, const PermGroup& h, const Caps& caps = {});

// All subgroups of order m, sorted by their element lists. The search grows
// subgroups one element at a time from the cyclic ones and only keeps
// intermediates whose order divides m, so it is complete whenever it runs
// (|G| <= caps.subgroup_search).
std::vector<PermGroup> subgroups_of_order(const PermGroup& g, std::uint64_t m, const Caps& caps = {});

// Size of the S_n conjugacy class of a permutation with the given cycle
// structure, as a decimal string (may exceed 64 bits).
std::string symmetric_class_size(const Permutation& s);

}  // namespace sylowbench

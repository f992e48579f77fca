#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sylowbench/arith.hpp"
#include "sylowbench/caps.hpp"
#include "sylowbench/group.hpp"

namespace sylowbench {

// A Sylow p-subgroup, grown from the trivial group by adjoining p-elements of
// the current normalizer. Elements are scanned in lexicographic order; `skip`
// passes over that many candidate first generators, which gives
// independently seeded representatives. p not dividing |G| gives the trivial
// subgroup.
PermGroup find_sylow(const PermGroup& g, std::uint64_t p, const Caps& caps = {}, std::size_t skip = 0);

// One subgroup of a conjugacy class, as its sorted element list plus
// generators.
struct ConjugateSubgroup {
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;

  bool contains(const Permutation& x) const;
};

// Orbit of H under conjugation by G, starting with H itself. Throws
// OrbitCapExceeded past caps.orbit members and CapExceeded when H has more
// than caps.elements elements.
std::vector<ConjugateSubgroup> conjugate_orbit(const PermGroup& g, const PermGroup& h, const Caps& caps = {});

struct SylowReport {
  std::uint64_t p = 0;
  std::uint64_t sylow_order = 1;
  std::uint64_t count = 1;
  std::uint64_t normalizer_order = 1;
  std::uint64_t p_core_order = 1;
  std::uint64_t action_kernel_order = 1;
  Method normalizer_method = Method::brute_force;
  std::uint64_t orbit_size = 0;  // enumerated conjugates; equals count
};

SylowReport count_sylow(const PermGroup& g, std::uint64_t p, const Caps& caps = {});

struct PCoreKernel {
  PermGroup p_core;
  PermGroup kernel;           // kernel of the action on the cosets of N_G(P)
  std::uint64_t count = 1;    // n_p(G)
  std::uint64_t quotient_count = 1;  // n_p of the action image
  std::uint64_t conjugation_kernel_order = 1;
  bool p_core_in_kernel = false;
};

PCoreKernel p_core_and_kernel(const PermGroup& g, std::uint64_t p, const Caps& caps = {});

struct NotAbelianSylow {};

struct BrodkeyPair {
  PermGroup p;
  PermGroup q;
  std::uint64_t intersection_order = 1;
  std::uint64_t p_core_order = 1;
};

std::variant<BrodkeyPair, NotAbelianSylow> brodkey_pair(const PermGroup& g, std::uint64_t p, const Caps& caps = {});

struct CentaltResult {
  std::uint64_t p = 0;
  std::uint64_t order = 0;            // |C_{A_2p}(sigma)|
  std::uint64_t symmetric_order = 0;  // |C_{S_2p}(sigma)|
  bool pass = false;
  Method method = Method::brute_force;
};

// sigma = (1..p)(p+1..2p) in A_2p; pass iff its centralizer has order p^2.
CentaltResult verify_centalt(std::uint64_t p, const Caps& caps = {});

struct NcResult {
  std::uint64_t nc_order = 1;  // |N_G(P)| / |C_G(P)|
  bool is_cyclic = false;
  bool divides_p_minus_1 = false;
  std::uint64_t normalizer_order = 1;
  std::uint64_t centralizer_order = 1;

  bool holds() const { return is_cyclic && divides_p_minus_1; }
};

// Throws PreconditionFailed ("SylowNotPrimeOrder") unless |P| = p.
NcResult nc_check(const PermGroup& g, std::uint64_t p, const Caps& caps = {});

struct NotCyclicSylow2 {};

// Normal 2-complement via the regular representation: repeatedly keep the
// elements acting as even permutations on the current subgroup.
std::variant<PermGroup, NotCyclicSylow2> cyc2_complement(const PermGroup& g, const Caps& caps = {});

enum class Uniqueness { verified, violated, not_checked };
const char* uniqueness_name(Uniqueness u);

struct Cyc2Verification {
  PermGroup complement;
  std::uint64_t sylow2_order = 1;
  std::uint64_t index = 1;
  bool normal = false;
  Uniqueness uniqueness = Uniqueness::not_checked;

  bool holds() const { return normal && index == sylow2_order && uniqueness != Uniqueness::violated; }
};

// Uniqueness among normal subgroups of the same index is checked by full
// subgroup enumeration when |G| <= envelope.
inline constexpr std::uint64_t kUniquenessEnvelope = 200;

std::variant<Cyc2Verification, NotCyclicSylow2> verify_cyc2(const PermGroup& g, const Caps& caps = {},
                                                            std::uint64_t envelope = kUniquenessEnvelope);

struct FrobeniusRow {
  unsigned a = 0;
  std::uint64_t count = 0;  // number of subgroups of order p^a
  bool mod_p_ok = false;
  std::optional<FrobeniusClass> mod_p2_class;  // present when p^{a+1} divides |G|
};

std::vector<FrobeniusRow> frobenius_counts(const PermGroup& g, std::uint64_t p, const Caps& caps = {});

}  // namespace sylowbench

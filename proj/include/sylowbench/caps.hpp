#pragma once

#include <cstdint>

namespace sylowbench {

// Brute-force limits. Exceeding any of them is an error, never a silent
// truncation.
struct Caps {
  std::uint64_t elements = 100000;        // closure enumeration
  std::uint64_t orbit = 1000000;          // conjugation orbits
  std::uint64_t degree = 5000;            // coset-action index
  std::uint64_t regular = 5000;           // |G| for the regular embedding
  std::uint64_t subgroup_search = 10000;  // |G| for subgroups_of_order
};

}  // namespace sylowbench

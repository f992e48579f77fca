#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylowbench/group.hpp"

namespace sylowbench {

PermGroup cyclic_group(std::size_t n);
PermGroup dihedral_group(std::size_t n);  // order 2n, on n points
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
// Second factor relabelled above the first.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
PermGroup elementary_abelian_group(std::uint64_t p, std::size_t k);
// x -> a x + b over Z/q with a in the subgroup of order k of (Z/q)^*; order q k.
PermGroup affine_group(std::uint64_t q, std::uint64_t k);
PermGroup dodecahedral_group();

// Family expressions such as "dihedral(7)", "dodecahedral" or
// "direct_product(cyclic(3), alternating(4))". Throws CatalogError (line 0)
// for unknown families and out-of-range parameters.
PermGroup builtin(std::string_view spec);

struct NamedGroup {
  std::string name;
  PermGroup group;
};

// Fixed list of built-in groups in ascending order of size, names are
// builtin() specs.
const std::vector<NamedGroup>& builtin_catalog();

struct CatalogEntry {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;  // cycle notation
  std::optional<std::uint64_t> expected_order;
};

// Lines `name ; degree ; gen1 , gen2 , ... [; order]`; '#' comments and blank
// lines are ignored. Every entry is parsed and, when an order is given,
// checked. Throws CatalogError with the line number.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

PermGroup entry_group(const CatalogEntry& entry);

// `builtin:<spec>` or `file:<path>:<name>`.
NamedGroup resolve_group(std::string_view ref);

}  // namespace sylowbench

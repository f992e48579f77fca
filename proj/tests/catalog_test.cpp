#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "sylowbench/catalog.hpp"
#include "sylowbench/errors.hpp"

using namespace sylowbench;

TEST_CASE("family orders") {
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(dihedral_group(7).order() == 14);
  CHECK(symmetric_group(6).order() == 720);
  CHECK(alternating_group(7).order() == 2520);
  CHECK(elementary_abelian_group(3, 3).order() == 27);
  CHECK(affine_group(7, 3).order() == 21);
  CHECK(affine_group(23, 11).order() == 253);
  CHECK(dodecahedral_group().order() == 120);
  CHECK(direct_product(cyclic_group(3), dihedral_group(5)).degree() == 8);
  CHECK(builtin(" direct_product( cyclic(3) , alternating(4) ) ").order() == 36);
}

TEST_CASE("bad specs") {
  CHECK_THROWS_AS(builtin("dihedral(2)"), CatalogError);
  CHECK_THROWS_AS(builtin("cyclic(0)"), CatalogError);
  CHECK_THROWS_AS(builtin("klein"), CatalogError);
  CHECK_THROWS_AS(builtin("cyclic(3"), CatalogError);
  CHECK_THROWS_AS(builtin("affine(8,7)"), CatalogError);
  CHECK_THROWS_AS(builtin("affine(7,4)"), CatalogError);
}

TEST_CASE("built-in catalog") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() >= 25);
  CHECK(cat.front().group.order() == 1);
  std::uint64_t prev = 0;
  for (const auto& g : cat) {
    CHECK(g.group.order() >= prev);
    prev = g.group.order();
    CHECK(builtin(g.name).order() == g.group.order());
  }
  CHECK(prev >= 5000);
  CHECK(prev <= 10000);
}

TEST_CASE("catalog files") {
  auto entries = parse_catalog("# test\nklein ; 4 ; (1 2)(3 4), (1 3)(2 4) ; 4\ntrivial ; 3 ;\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "klein");
  CHECK(entry_group(entries[0]).order() == 4);
  CHECK(entry_group(entries[1]).order() == 1);

  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_catalog(text);
    } catch (const CatalogError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("a ; 3 ; (1 2)\na ; 3 ; (1 3)\n") == 2);
  CHECK(line_of("\n\nb ; 3 ; (1 2 3) ; 6\n") == 3);
  CHECK(line_of("c ; 3 ; (1 4)\n") == 1);
  CHECK(line_of("d ; x ; (1 2)\n") == 1);
  CHECK(line_of("e 3 (1 2)\n") == 1);
}

TEST_CASE("group references") {
  CHECK(resolve_group("builtin:symmetric(4)").group.order() == 24);
  std::string path = "catalog_test_groups.txt";
  {
    std::ofstream out(path);
    out << "q8like ; 4 ; (1 2 3 4) ; 4\n";
  }
  CHECK(resolve_group("file:" + path + ":q8like").group.order() == 4);
  CHECK_THROWS_AS(resolve_group("file:" + path + ":missing"), UsageError);
  CHECK_THROWS_AS(resolve_group("file:/nonexistent/x.txt:g"), IoError);
  CHECK_THROWS_AS(resolve_group("symmetric(4)"), UsageError);
  std::remove(path.c_str());
}

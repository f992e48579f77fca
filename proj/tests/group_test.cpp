#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sylowbench/catalog.hpp"
#include "sylowbench/errors.hpp"
#include "sylowbench/group.hpp"

using namespace sylowbench;

namespace {

std::vector<Permutation> as_vector(const oracle::Set& s) { return {s.begin(), s.end()}; }

oracle::Set naive(const PermGroup& g) { return oracle::closure(g.degree(), g.generators()); }

}  // namespace

TEST_CASE("chain order matches naive closure on small catalog groups") {
  for (const NamedGroup& g : builtin_catalog()) {
    if (g.group.order() > 800) continue;
    CAPTURE(g.name);
    oracle::Set all = naive(g.group);
    CHECK(g.group.order() == all.size());
    CHECK(enumerate_elements(g.group, 100000) == as_vector(all));
  }
}

TEST_CASE("membership agrees with the closure") {
  std::mt19937_64 rng(0x5eed0002);
  PermGroup g = builtin("direct_product(dihedral(5), cyclic(3))");
  oracle::Set all = naive(g);
  for (int i = 0; i < 400; ++i) {
    Permutation x = oracle::random_perm(g.degree(), rng);
    CHECK(g.contains(x) == (all.count(x) == 1));
  }
  for (const auto& x : all) CHECK(g.contains(x));
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_elements(symmetric_group(6), 100), CapExceeded);
}

TEST_CASE("random generator sets: chain order equals closure size") {
  std::mt19937_64 rng(0x5eed0003);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 6;
    std::vector<Permutation> gens;
    for (std::size_t k = 0, m = 1 + rng() % 3; k < m; ++k) gens.push_back(oracle::random_perm(n, rng));
    PermGroup g(n, gens);
    CHECK(g.order() == oracle::closure(n, gens).size());
  }
}

TEST_CASE("centralizer and normalizer by both methods match the oracle") {
  std::mt19937_64 rng(0x5eed0004);
  Caps brute, orbit;
  for (const char* spec : {"symmetric(4)", "dihedral(6)", "direct_product(cyclic(3), alternating(4))", "affine(7,3)"}) {
    CAPTURE(spec);
    PermGroup g = builtin(spec);
    std::vector<Permutation> elems = enumerate_elements(g, 100000);
    // One below |G| forces the orbit methods; H itself must stay enumerable.
    orbit.elements = g.order() - 1;
    oracle::Set all(elems.begin(), elems.end());
    for (int i = 0; i < 6; ++i) {
      const Permutation& s = elems[rng() % elems.size()];
      Method m1, m2;
      PermGroup c1 = centralizer(g, s, brute, &m1), c2 = centralizer(g, s, orbit, &m2);
      CHECK(m1 == Method::brute_force);
      CHECK(m2 == Method::orbit_stabilizer);
      CHECK(c1.order() == oracle::centralizer_size(all, s));
      CHECK(same_subgroup(c1, c2));

      const Permutation& t = elems[rng() % elems.size()];
      PermGroup h(g.degree(), {s, t});
      oracle::Set hs = naive(h);
      PermGroup n1 = normalizer(g, h, brute, &m1);
      CHECK(n1.order() == oracle::normalizer_size(all, hs));
      if (hs.size() < all.size()) {
        PermGroup n2 = normalizer(g, h, orbit, &m2);
        CHECK(m2 == Method::orbit_stabilizer);
        CHECK(same_subgroup(n1, n2));
      }
      CHECK(is_normal(n1, h));
    }
  }
}

TEST_CASE("normalizer rejects non-subgroups") {
  PermGroup g = builtin("alternating(4)");
  PermGroup h(4, {parse_cycles("(1 2)", 4)});
  CHECK_THROWS_AS(normalizer(g, h), NotASubgroup);
}

TEST_CASE("orbit-stabilizer on random points") {
  std::mt19937_64 rng(0x5eed0005);
  const auto& cat = builtin_catalog();
  for (int i = 0; i < 50; ++i) {
    const NamedGroup& g = cat[rng() % cat.size()];
    Point x = static_cast<Point>(rng() % g.group.degree());
    OrbitStabilizer os = orbit_and_stabilizer(g.group, x);
    CHECK(os.orbit.size() * os.stabilizer.order() == g.group.order());
    for (const auto& s : os.stabilizer.generators()) CHECK(s(x) == x);
  }
}

TEST_CASE("orbits partition the domain") {
  PermGroup g = builtin("direct_product(cyclic(3), dihedral(4))");
  auto o = orbits(g);
  REQUIRE(o.size() == 2);
  CHECK(o[0] == std::vector<Point>{0, 1, 2});
  CHECK(o[1].size() == 4);
}

TEST_CASE("coset action kernel is the core") {
  PermGroup s4 = symmetric_group(4);
  PermGroup h(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)});
  ActionImage a = coset_action(s4, h);
  CHECK(a.image.degree() == 3);
  CHECK(a.image.order() == 6);
  CHECK(a.kernel.order() == 4);
  oracle::Set all = naive(s4), hs = naive(h), core = hs;
  for (const auto& g : all) {
    oracle::Set c = oracle::conjugate_set(g, hs), keep;
    for (const auto& x : core)
      if (c.count(x)) keep.insert(x);
    core = keep;
  }
  CHECK(a.kernel.order() == core.size());

  ActionImage reg = coset_action(builtin("dihedral(5)"), PermGroup(5));
  CHECK(reg.image.degree() == 10);
  CHECK(reg.kernel.order() == 1);
  for (const auto& g : reg.image.generators()) CHECK(g.first_moved_point() == 0);
}

TEST_CASE("subgroups of a given order match the naive lattice") {
  for (const char* spec : {"symmetric(4)", "dihedral(6)", "elementary_abelian(2,3)", "cyclic(12)", "alternating(4)"}) {
    CAPTURE(spec);
    PermGroup g = builtin(spec);
    auto lattice = oracle::all_subgroups(naive(g));
    for (std::uint64_t m = 1; m <= g.order(); ++m) {
      if (g.order() % m) continue;
      std::size_t expect = std::count_if(lattice.begin(), lattice.end(), [&](const oracle::Set& s) { return s.size() == m; });
      CHECK(subgroups_of_order(g, m).size() == expect);
    }
  }
}

TEST_CASE("symmetric class size") {
  CHECK(symmetric_class_size(parse_cycles("(1 2 3)(4 5 6)", 6)) == "40");
  CHECK(symmetric_class_size(parse_cycles("(1 2)", 20)) == "190");
}

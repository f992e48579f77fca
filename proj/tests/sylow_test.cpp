#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sylowbench/catalog.hpp"
#include "sylowbench/errors.hpp"
#include "sylowbench/sylow.hpp"

using namespace sylowbench;

namespace {

oracle::Set naive(const PermGroup& g) { return oracle::closure(g.degree(), g.generators()); }

std::vector<std::uint64_t> primes_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const PrimePower& f : factorize(n)) out.push_back(f.prime);
  return out;
}

}  // namespace

TEST_CASE("sylow counts match naive conjugation on small groups") {
  for (const NamedGroup& g : builtin_catalog()) {
    if (g.group.order() > 200) continue;
    oracle::Set all = naive(g.group);
    for (std::uint64_t p : primes_of(all.size())) {
      CAPTURE(g.name);
      CAPTURE(p);
      PermGroup sp = find_sylow(g.group, p);
      oracle::Set ps = naive(sp);
      CHECK(ps.size() == oracle::naive_pow_part(all.size(), p));
      for (const auto& x : ps) CHECK(all.count(x));
      auto conj = oracle::conjugates(all, ps);
      SylowReport r = count_sylow(g.group, p);
      CHECK(r.count == conj.size());
      CHECK(r.orbit_size == conj.size());
      CHECK(r.normalizer_order == oracle::normalizer_size(all, ps));

      oracle::Set core = ps;
      for (const auto& c : conj) {
        oracle::Set keep;
        for (const auto& x : core)
          if (c.count(x)) keep.insert(x);
        core = keep;
      }
      CHECK(r.p_core_order == core.size());
    }
  }
}

TEST_CASE("independently seeded sylow subgroups are conjugate") {
  PermGroup g = builtin("symmetric(5)");
  for (std::uint64_t p : {2, 3, 5})
    for (std::size_t skip = 0; skip < 4; ++skip) {
      PermGroup a = find_sylow(g, p, {}, 0), b = find_sylow(g, p, {}, skip);
      CHECK(a.order() == b.order());
      auto orbit = conjugate_orbit(g, a);
      bool found = false;
      for (const auto& c : orbit) found = found || c.elements == enumerate_elements(b, 1000);
      CHECK(found);
    }
  CHECK(find_sylow(g, 7).order() == 1);
}

TEST_CASE("conjugate orbit cap") {
  Caps caps;
  caps.orbit = 5;
  PermGroup g = builtin("symmetric(5)");
  CHECK_THROWS_AS(conjugate_orbit(g, find_sylow(g, 2), caps), OrbitCapExceeded);
}

TEST_CASE("p-core lies in the kernel of the normalizer action") {
  for (const char* spec : {"symmetric(4)", "alternating(5)", "direct_product(cyclic(3), alternating(4))", "affine(7,6)"}) {
    PermGroup g = builtin(spec);
    for (std::uint64_t p : primes_of(g.order())) {
      CAPTURE(spec);
      CAPTURE(p);
      PCoreKernel k = p_core_and_kernel(g, p);
      CHECK(k.p_core_in_kernel);
      CHECK(k.p_core.is_subgroup_of(k.kernel));
      CHECK(is_normal(g, k.kernel));
      CHECK(k.count == count_sylow(g, p).count);
    }
  }
}

TEST_CASE("brodkey pair") {
  auto b = brodkey_pair(builtin("alternating(5)"), 5);
  REQUIRE(std::holds_alternative<BrodkeyPair>(b));
  CHECK(std::get<BrodkeyPair>(b).intersection_order == 1);
  auto s4 = brodkey_pair(builtin("symmetric(4)"), 3);
  REQUIRE(std::holds_alternative<BrodkeyPair>(s4));
  CHECK(std::get<BrodkeyPair>(s4).intersection_order == std::get<BrodkeyPair>(s4).p_core_order);
  CHECK(std::holds_alternative<NotAbelianSylow>(brodkey_pair(builtin("symmetric(4)"), 2)));
}

TEST_CASE("centralizer of two disjoint p-cycles") {
  CentaltResult c3 = verify_centalt(3), c5 = verify_centalt(5);
  CHECK(c3.order == 9);
  CHECK(c3.symmetric_order == 18);
  CHECK(c5.order == 25);
  CHECK(c5.symmetric_order == 50);
  CHECK(c3.pass);
  CHECK(c5.pass);
  CHECK_THROWS_AS(verify_centalt(2), PreconditionFailed);
}

TEST_CASE("N/C for prime-order sylow subgroups") {
  NcResult r = nc_check(builtin("alternating(5)"), 5);
  CHECK(r.nc_order == 2);
  CHECK(r.holds());
  CHECK(nc_check(builtin("affine(7,6)"), 7).nc_order == 6);
  CHECK_THROWS_AS(nc_check(builtin("symmetric(4)"), 2), PreconditionFailed);
}

TEST_CASE("normal 2-complement is the set of odd-order elements") {
  for (const char* spec : {"dihedral(7)", "cyclic(12)", "affine(7,6)", "direct_product(dihedral(5), cyclic(3))", "dihedral(15)"}) {
    CAPTURE(spec);
    PermGroup g = builtin(spec);
    auto v = cyc2_complement(g);
    REQUIRE(std::holds_alternative<PermGroup>(v));
    oracle::Set odd;
    for (const auto& x : naive(g))
      if (oracle::order_of(x) % 2 == 1) odd.insert(x);
    CHECK(naive(std::get<PermGroup>(v)) == odd);
    auto ver = std::get<Cyc2Verification>(verify_cyc2(g));
    CHECK(ver.holds());
    CHECK(ver.uniqueness == Uniqueness::verified);
  }
  CHECK(std::holds_alternative<NotCyclicSylow2>(cyc2_complement(builtin("symmetric(4)"))));
}

TEST_CASE("subgroup counts of prime-power order") {
  for (const char* spec : {"symmetric(4)", "elementary_abelian(2,3)", "dihedral(4)", "elementary_abelian(3,2)", "cyclic(9)"}) {
    PermGroup g = builtin(spec);
    auto lattice = oracle::all_subgroups(naive(g));
    for (std::uint64_t p : primes_of(g.order()))
      for (const FrobeniusRow& row : frobenius_counts(g, p)) {
        CAPTURE(spec);
        CAPTURE(row.a);
        std::uint64_t size = ipow(p, row.a);
        std::uint64_t expect = std::count_if(lattice.begin(), lattice.end(), [&](const oracle::Set& s) { return s.size() == size; });
        CHECK(row.count == expect);
        CHECK(row.mod_p_ok == (expect % p == 1));
      }
  }
}

#include <functional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sylowbench/arith.hpp"
#include "sylowbench/errors.hpp"

using namespace sylowbench;

namespace {

std::uint64_t naive_legendre(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t k = 2; k <= n; ++k)
    for (std::uint64_t m = k; m % p == 0; m /= p) ++v;
  return v;
}

bool naive_prime_power(std::uint64_t n) {
  for (std::uint64_t q = 2; q <= n; ++q)
    if (oracle::naive_prime(q) && n % q == 0) {
      std::uint64_t x = n;
      while (x % q == 0) x /= q;
      return x == 1;
    }
  return false;
}

// Is n a product of factors drawn from the allowed predicate (repetition
// allowed)?
bool naive_product(std::uint64_t n, const std::function<bool(std::uint64_t)>& allowed) {
  if (n == 1) return true;
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0 && allowed(d) && naive_product(n / d, allowed)) return true;
  return false;
}

}  // namespace

TEST_CASE("primes, valuations and factorizations") {
  for (std::uint64_t n = 0; n < 400; ++n) CHECK(is_prime(n) == oracle::naive_prime(n));
  for (std::uint64_t n = 1; n < 400; ++n) {
    std::uint64_t prod = 1;
    for (const PrimePower& f : factorize(n)) {
      CHECK(oracle::naive_prime(f.prime));
      CHECK(f.value == oracle::naive_pow_part(n, f.prime));
      CHECK(valuation(n, f.prime) == f.exponent);
      prod *= f.value;
    }
    CHECK(prod == n);
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    CHECK(divisors(n) == divs);
    CHECK(is_prime_power(n) == naive_prime_power(n));
    CHECK(odd_part(n) == n / oracle::naive_pow_part(n, 2));
  }
  CHECK_THROWS(ipow(2, 64));
  CHECK(ipow(3, 4) == 81);
}

TEST_CASE("legendre valuation") {
  for (std::uint64_t p : {2, 3, 5, 7, 17})
    for (std::uint64_t n = 0; n < 200; ++n) CHECK(legendre_valuation(n, p) == naive_legendre(n, p));
  CHECK(legendre_valuation(35, 17) == 2);
}

TEST_CASE("solvable-attainable test matches the definition") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (std::uint64_t n = 1; n < 300; ++n) {
      bool expect = true;
      for (std::uint64_t q = 2; q <= n; ++q)
        if (oracle::naive_prime(q) && n % q == 0 && oracle::naive_pow_part(n, q) % p != 1 % p) expect = false;
      CHECK(phall_solvable_test(n, p).solvable == expect);
    }
  CHECK_FALSE(phall_solvable_test(6, 5).solvable);
}

TEST_CASE("product test matches exhaustive factor search") {
  std::mt19937_64 rng(0x5eed0006);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<std::uint64_t> extra;
    for (int k = 0; k < trial; ++k) extra.push_back(2 + rng() % 60);
    for (std::uint64_t p : {3, 5, 7}) {
      auto allowed = [&](std::uint64_t d) {
        if (naive_prime_power(d) && d % p == 1) return true;
        return std::find(extra.begin(), extra.end(), d) != extra.end();
      };
      for (std::uint64_t n = 1; n < 250; ++n) {
        MHallReport r = mhall_product_test(n, p, extra);
        CHECK(r.product == naive_product(n, allowed));
        if (r.product) {
          std::uint64_t prod = 1;
          for (auto w : r.witness) {
            CHECK(allowed(w));
            prod *= w;
          }
          CHECK(prod == n);
          CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
        }
      }
    }
  }
  CHECK_FALSE(mhall_product_test(22, 3, {}).product);
  CHECK_FALSE(mhall_product_test(22, 7, {}).product);
}

TEST_CASE("mod p^2 classes") {
  CHECK(frobenius_pseudo_filter(35, 17) == FrobeniusClass::other);
  CHECK(frobenius_pseudo_filter(18, 17) == FrobeniusClass::one_plus_p);
  CHECK(frobenius_pseudo_filter(290, 17) == FrobeniusClass::one);
  CHECK(std::string(frobenius_class_name(FrobeniusClass::one_plus_p)) == "1+p");
}

TEST_CASE("candidate scan") {
  auto scan = candidate_scan(17, 40, {});
  REQUIRE(scan.size() == 3);
  CHECK(scan[0].n == 1);
  CHECK(scan[1].n == 18);
  CHECK(scan[2].n == 35);
  CHECK(scan[0].status == CandidateStatus::solvable_attainable);
  CHECK(scan[1].status != CandidateStatus::pseudo_candidate);
  CHECK(scan[2].status == CandidateStatus::pseudo_candidate);
  for (const auto& v : candidate_scan(5, 200, {})) CHECK(v.n % 5 == 1);

  std::vector<std::uint64_t> extra{35};
  CHECK(classify_candidate(35, 17, extra).status == CandidateStatus::product_attainable);
}

TEST_CASE("extra list parsing") {
  CHECK(parse_extra_list("# parts\n6\n\n 10  # comment\n") == std::vector<std::uint64_t>{6, 10});
  try {
    parse_extra_list("6\nseven\n");
    FAIL("expected CatalogError");
  } catch (const CatalogError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_extra_list("0\n"), CatalogError);
  std::vector<std::uint64_t> v{1, 2, 3};
  CHECK(join_numbers(v) == "1,2,3");
}
